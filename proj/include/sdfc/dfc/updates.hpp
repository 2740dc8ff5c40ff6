#ifndef SDFC_DFC_UPDATES_HPP
#define SDFC_DFC_UPDATES_HPP

#include "sdfc/dfc/dynamics.hpp"
#include "sdfc/numerics/adam.hpp"

#include <cstdint>
#include <vector>

namespace sdfc {

// Raw (unscaled) weight change for one layer plus the rows allowed to move.
// Rows flagged 0 are exactly zero in `delta` and must not be touched.
struct LayerUpdate {
    Matrix delta;
    std::vector<std::uint8_t> eligible_rows;

    // Mean over the non-frozen entries; the centering contract makes this ~0.
    double mean_over_eligible(bool skip_diagonal = false) const;
};

// Batch mean of (r_ss - phi(v_ff)) r_{i-1,ss}^T with per-sample suppressed
// neurons contributing nothing; a row is frozen when its neuron is suppressed
// in every sample. Centred over the eligible rows (layer-wide or per row).
std::vector<LayerUpdate> forward_weight_update(const ConvergedState& cs, Centering centering);

// Hidden layers only. With sparsity: rows of suppressed neurons receive
// -|phi(v_ff)| |r_ss|^T (batch mean), active rows stay zero. Without sparsity
// in that layer: (|r_ss| - |phi(v_ff)|) |r_ss|^T on every row. Diagonal held at
// zero; centred over the eligible off-diagonal entries.
std::vector<LayerUpdate> recurrent_weight_update(const ConvergedState& cs, const DfcConfig& cfg,
                                                 std::size_t num_hidden);

struct BatchStats {
    double accuracy_before = 0.0;  // feedforward accuracy on the batch prior to the update
    int steps = 0;
    bool converged = false;
    double max_error_norm = 0.0;
    std::size_t degenerate_gating_rows = 0;
};

struct TrainResult {
    ConvergedState state;
    BatchStats stats;
};

// One learning step: Q -> dynamics -> forward update (Adam, lr = cfg.lr) ->
// recurrent update (plain step of cfg.recurrent_lr). `adam` holds one state per
// forward layer and is created on first use.
TrainResult train_on_batch(NetworkParams& params, std::vector<AdamState>& adam, const Matrix& x,
                           std::span<const int> labels, const DfcConfig& cfg);

class DfcLearner {
public:
    DfcLearner(NetworkParams params, DfcConfig cfg);

    BatchStats train_batch(const Matrix& x, std::span<const int> labels);
    ConvergedState settle(const Matrix& x, std::span<const int> labels) const;

    const NetworkParams& params() const { return params_; }
    NetworkParams& params() { return params_; }
    const DfcConfig& config() const { return cfg_; }

private:
    NetworkParams params_;
    DfcConfig cfg_;
    std::vector<AdamState> adam_;
};

} // namespace sdfc

#endif // SDFC_DFC_UPDATES_HPP
