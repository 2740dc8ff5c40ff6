#ifndef SDFC_DFC_DYNAMICS_HPP
#define SDFC_DFC_DYNAMICS_HPP

#include "sdfc/dfc/network.hpp"

#include <functional>
#include <span>
#include <vector>

namespace sdfc {

// Pre- and post-activations of a plain feedforward pass (no gating, no
// sparsity, no controller); index i holds layer i+1.
struct ForwardTrace {
    std::vector<Matrix> pre;
    std::vector<Matrix> post;
};

ForwardTrace feedforward_trace(const NetworkParams& params, const Matrix& x);

// Test-time pass: r_i = phi(W_i r_{i-1}). Depends on W only.
std::vector<Matrix> feedforward_pass(const NetworkParams& params, const Matrix& x);

std::vector<int> predict(const NetworkParams& params, const Matrix& x);

// r_L* = r_L - lambda * (softmax(r_L) - onehot(label)), row per sample.
Matrix output_target(const Matrix& output, std::span<const int> labels, double lambda);

Matrix softmax_rows(const Matrix& logits);

// Per-sample feedback weights Q_i = (d r_L / d v_i)^T at the feedforward
// state. q[i] has one row per sample holding Q_i^T = d r_L / d v_i as a
// row-major (n_L x n_i) block.
struct FeedbackWeights {
    std::vector<Matrix> q;
    std::size_t n_out = 0;

    Eigen::Map<const Matrix> jacobian(std::size_t layer, Eigen::Index sample) const {
        const auto n = q[layer].cols() / static_cast<Eigen::Index>(n_out);
        return {q[layer].row(sample).data(), static_cast<Eigen::Index>(n_out), n};
    }
    // Q_i for one sample (n_i x n_L).
    Matrix block(std::size_t layer, Eigen::Index sample) const { return jacobian(layer, sample).transpose(); }
};

FeedbackWeights compute_feedback_weights(const NetworkParams& params, const ForwardTrace& trace);
FeedbackWeights compute_feedback_weights(const NetworkParams& params, const Matrix& x);

// Suppresses the floor(fraction * n) lowest-scoring neurons, score =
// (1-rho)|v_ff|/mean|v_ff| + rho|v_fb|/mean|v_fb| (a term with zero mean
// contributes nothing). Ties go to the lowest index. Returns 1 = suppressed.
std::vector<std::uint8_t> wta_select(std::span<const double> v_ff, std::span<const double> v_fb,
                                     double rho, double fraction);

// Row-wise wta_select into `mask` (same shape as the drives).
void wta_select_rows(const Matrix& v_ff, const Matrix& v_fb, double rho, double fraction, Mask& mask);

// Growing variant: neurons already flagged in `mask` stay suppressed and the
// lowest-scoring remaining neurons are added until floor(fraction * n) are
// suppressed. Scores use the same layer-wide normalisation as wta_select.
void wta_grow_rows(const Matrix& v_ff, const Matrix& v_fb, double rho, double fraction, Mask& mask);

// pre_gate (.) sigmoid(R |r|), rescaled per sample so the L1 norm equals that
// of pre_gate. Rows whose gated norm vanishes while pre_gate does not come
// back as zeros; `degenerate_rows` counts them when given.
Matrix apply_recurrent_gating(const Matrix& pre_gate, const Matrix& recurrent, const Matrix& activity,
                              std::size_t* degenerate_rows = nullptr);

struct ConvergedLayer {
    Matrix target;       // r_{i,ss}; suppressed hidden neurons are exactly 0
    Matrix feedforward;  // phi(v_{i,ss}^ff): gated, no controller, mask not applied
    Matrix pre_gate;     // W_i r_{i-1,ss}
    Mask suppressed;     // final WTA mask (update eligibility only at the output)

    // phi(v^ff) with the suppression mask applied (hidden layers).
    Matrix masked_feedforward() const;
};

struct ConvergedState {
    Matrix input;                        // r_0
    std::vector<ConvergedLayer> layers;  // layers 1..L
    Matrix output_target;                // r_L*
    Matrix output_error;                 // r_L* - r_{L,ss}
    Matrix control;                      // u at termination
    int steps = 0;
    bool converged = false;
    std::size_t degenerate_gating_rows = 0;
    std::vector<int> predictions_before;  // feedforward argmax before dynamics

    double max_error_norm() const;
};

// Explicit-Euler integration of tau_v dv_i/dt = -v_i + v_i^ff + Q_i u with a
// leaky PI controller on e = r_L* - r_L. Throws DivergenceError if any |v|
// exceeds cfg.divergence_limit or turns non-finite.
ConvergedState simulate_dynamics(const NetworkParams& params, const Matrix& x, std::span<const int> labels,
                                 const DfcConfig& cfg);

// Called once per integration step after the Euler update with the step
// index, the masks selected at that step and the post-update output error.
using DynamicsObserver = std::function<void(int step, const std::vector<Mask>& masks, const Matrix& error)>;

// Same, with an explicit output target and precomputed pieces.
ConvergedState simulate_dynamics(const NetworkParams& params, const Matrix& x, const ForwardTrace& trace,
                                 const FeedbackWeights& feedback, const Matrix& target,
                                 const DfcConfig& cfg, const DynamicsObserver& observer = {});

// Target built from labels; with cfg.tracking_target it is re-derived every
// step from the current feedforward output phi(v_L^ff(t)) (masks and gating
// included), otherwise fixed at the plain feedforward output.
ConvergedState simulate_dynamics(const NetworkParams& params, const Matrix& x, const ForwardTrace& trace,
                                 const FeedbackWeights& feedback, std::span<const int> labels,
                                 const DfcConfig& cfg, const DynamicsObserver& observer = {});

} // namespace sdfc

#endif // SDFC_DFC_DYNAMICS_HPP
