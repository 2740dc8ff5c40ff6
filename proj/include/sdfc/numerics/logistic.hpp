#ifndef SDFC_NUMERICS_LOGISTIC_HPP
#define SDFC_NUMERICS_LOGISTIC_HPP

#include "sdfc/numerics/matrix.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace sdfc {

struct LogisticModel {
    Vector weights;
    double bias = 0.0;
    double penalty = 0.0;
    int iterations = 0;
    bool converged = false;
    // Objective value after every accepted iterate (only when requested).
    std::vector<double> objective_trace;

    double decision(const Eigen::Ref<const RowVector>& x) const { return x.dot(weights) + bias; }
    int predict(const Eigen::Ref<const RowVector>& x) const { return decision(x) > 0.0 ? 1 : 0; }
    std::vector<int> predict(const Matrix& x) const;
    double accuracy(const Matrix& x, std::span<const int> labels) const;
    // Unit normal of the separating hyperplane, oriented toward class 1.
    Vector unit_normal() const;
};

struct LogisticOptions {
    int max_iterations = 10000;
    double tolerance = 1e-6;
    bool record_objective = false;
};

// Mean logistic loss + penalty * ||w||_1, minimised by proximal gradient with a
// Lipschitz step and backtracking (monotone). The bias is unpenalised.
// Throws DegenerateFitError when only one class is present.
LogisticModel fit_l1_logistic(const Matrix& x, std::span<const int> labels, double penalty,
                              const LogisticOptions& options = {});

// Inverse-regularisation convention with C = 1: L1 coefficient 1 / n_samples.
inline double default_l1_penalty(std::size_t n_samples) {
    return 1.0 / static_cast<double>(n_samples);
}

double l1_logistic_objective(const Matrix& x, std::span<const int> labels, const Vector& w,
                             double b, double penalty);

} // namespace sdfc

#endif // SDFC_NUMERICS_LOGISTIC_HPP
