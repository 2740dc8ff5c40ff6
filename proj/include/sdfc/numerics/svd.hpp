#ifndef SDFC_NUMERICS_SVD_HPP
#define SDFC_NUMERICS_SVD_HPP

#include "sdfc/numerics/matrix.hpp"

#include <vector>

namespace sdfc {

// Singular values in descending order, min(rows, cols) of them, computed by
// one-sided (Hestenes) Jacobi rotations. Tall inputs are first reduced to their
// square R factor, which has the same spectrum. Throws on an empty matrix.
std::vector<double> singular_values(const Matrix& m);

// Relative cutoff below which callers treat a singular value as zero.
inline constexpr double kSingularValueCutoff = 1e-12;

} // namespace sdfc

#endif // SDFC_NUMERICS_SVD_HPP
