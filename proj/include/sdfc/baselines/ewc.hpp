#ifndef SDFC_BASELINES_EWC_HPP
#define SDFC_BASELINES_EWC_HPP

#include "sdfc/baselines/bp.hpp"

#include <cstdint>

namespace sdfc {

// Penalty c * sum F (theta - theta*)^2 with the Fisher diagonal summed over
// consolidated tasks and the anchor at the latest boundary.
struct EwcState {
    Gradients fisher;
    Gradients anchor;
    double coefficient = 200.0;
    int consolidated = 0;
};

// Empirical diagonal Fisher over `n_samples` rows of `inputs` (drawn without
// replacement when possible), labels sampled from the model's own softmax.
// Adds to the running Fisher and re-anchors at the current weights.
void ewc_consolidate(EwcState& state, const BpNet& net, const Matrix& inputs, std::size_t n_samples,
                     std::uint64_t seed);

double ewc_penalty(const EwcState& state, const BpNet& net);
// 2 c F (theta - theta*); zero before the first consolidation.
Gradients ewc_penalty_grads(const EwcState& state, const BpNet& net);
Gradients ewc_loss_grads(const EwcState& state, const BpNet& net, const Matrix& x, std::span<const int> labels);

} // namespace sdfc

#endif // SDFC_BASELINES_EWC_HPP
