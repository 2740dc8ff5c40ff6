#ifndef SDFC_BASELINES_SI_HPP
#define SDFC_BASELINES_SI_HPP

#include "sdfc/baselines/bp.hpp"

namespace sdfc {

struct SiState {
    Gradients omega;        // path integral for the current task
    Gradients importance;   // consolidated Omega
    Gradients anchor;       // weights at the last boundary (or at init)
    double damping = 0.1;
    double coefficient = 10.0;

    static SiState start(const BpNet& net, double coefficient, double damping = 0.1);
};

// omega += -grad * delta
void si_step_accumulate(SiState& state, const Gradients& grads, const Gradients& param_delta);
// Omega += omega / ((theta - anchor)^2 + damping); omega = 0; anchor = theta.
void si_consolidate(SiState& state, const BpNet& net);

double si_penalty(const SiState& state, const BpNet& net);
// 2 c Omega (theta - anchor)
Gradients si_penalty_grads(const SiState& state, const BpNet& net);
Gradients si_loss_grads(const SiState& state, const BpNet& net, const Matrix& x, std::span<const int> labels);

} // namespace sdfc

#endif // SDFC_BASELINES_SI_HPP
