#ifndef SDFC_DFC_NETWORK_HPP
#define SDFC_DFC_NETWORK_HPP

#include "sdfc/numerics/activation.hpp"
#include "sdfc/numerics/matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sdfc {

// Boolean-per-neuron masks for a batch (rows = samples). 1 = suppressed.
using Mask = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Forward weights W_i (n_i x n_{i-1}) for layers 1..L and lateral gating
// weights R_i (n_i x n_i, zero diagonal) for hidden layers 1..L-1. No biases.
struct NetworkParams {
    std::vector<std::size_t> layer_sizes;   // n_0 (input) .. n_L (output)
    std::vector<Matrix> forward;            // forward[i-1] = W_i
    std::vector<Matrix> recurrent;          // recurrent[i-1] = R_i, hidden layers only
    Activation hidden_activation = Activation::tanh;
    Activation output_activation = Activation::linear;

    std::size_t num_layers() const { return forward.size(); }
    std::size_t num_hidden() const { return recurrent.size(); }
    Activation activation_of(std::size_t layer) const {
        return layer + 1 == num_layers() ? output_activation : hidden_activation;
    }

    // Xavier-uniform forward weights, zero recurrent weights.
    static NetworkParams create(const std::vector<std::size_t>& layer_sizes, Activation hidden,
                                Activation output, std::uint64_t seed);

    // Throws ShapeError when the W chain or R shapes are inconsistent.
    void validate() const;
};

enum class Centering { layer, row };

// How the suppressed population evolves during the sparsity ramp.
// grow: neurons once suppressed stay suppressed; each step adds the
//       lowest-scoring active neurons until the scheduled count is reached.
// reselect: the whole suppressed set is re-chosen from scratch every step.
enum class WtaMode { grow, reselect };

// Integration, controller, sparsity and learning-rate settings.
struct DfcConfig {
    double tau_v = 0.1;
    double dt = 0.05;
    int n_steps = 300;
    double k_p = 0.0;
    double k_i = 1.0;
    double alpha_u = 0.0;
    double tau_u = 1.0;
    double target_step = 0.1;           // lambda in r_L* = r_L - lambda dL/dr_L
    bool tracking_target = true;        // r_L taken from the settling network's feedforward output
    std::vector<double> sparsity;       // s_{i,ss} for layers 1..L (last = output)
    int ramp_steps = 150;
    double rho = 0.5;                   // feedback share of the WTA selection score
    double lr = 1e-3;                   // forward learning rate (Adam)
    double recurrent_lr = 40.0;         // plain step on R
    double conv_tol = 1e-3;
    bool recurrent = true;              // lateral gating + R learning
    Centering centering = Centering::layer;
    WtaMode wta_mode = WtaMode::grow;
    double divergence_limit = 1e6;

    double sparsity_of(std::size_t layer) const {
        return layer < sparsity.size() ? sparsity[layer] : 0.0;
    }
    bool any_hidden_sparsity(std::size_t num_hidden) const;
    // Throws std::invalid_argument when a field is out of range.
    void validate(std::size_t num_layers) const;
};

// floor(fraction * n) with a guard against representation error (0.57*100).
std::size_t suppressed_count(double fraction, std::size_t n);

// Scheduled fraction at step t: s_ss * min(t, T_ramp) / T_ramp.
double scheduled_fraction(double s_ss, int step, int ramp_steps);

} // namespace sdfc

#endif // SDFC_DFC_NETWORK_HPP
