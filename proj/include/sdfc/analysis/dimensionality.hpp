#ifndef SDFC_ANALYSIS_DIMENSIONALITY_HPP
#define SDFC_ANALYSIS_DIMENSIONALITY_HPP

#include "sdfc/numerics/matrix.hpp"

#include <vector>

namespace sdfc {

// exp of the Shannon entropy (natural log) of the normalised singular values.
// Throws std::invalid_argument for an all-zero or empty matrix.
double effective_rank(const Matrix& m);

struct UnalteredDimensionality {
    double dim_prev = 0.0;
    double dim_curr = 0.0;
    double dim_cum = 0.0;   // after the monotonicity guard
    double gamma = 0.0;
};

// Fraction of the previous tasks' effective dimensionality left untouched by
// task `current` (0-based, >= 1). task_targets[t] holds the activity vectors
// (rows) of task t. dim_cum is held between max(prev, curr) and prev + curr.
UnalteredDimensionality unaltered_dimensionality(const std::vector<Matrix>& task_targets, std::size_t current);

Matrix stack_rows(const std::vector<const Matrix*>& parts);

} // namespace sdfc

#endif // SDFC_ANALYSIS_DIMENSIONALITY_HPP
