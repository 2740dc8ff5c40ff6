#ifndef SDFC_BASELINES_BP_HPP
#define SDFC_BASELINES_BP_HPP

#include "sdfc/numerics/activation.hpp"
#include "sdfc/numerics/adam.hpp"

#include <span>
#include <vector>

namespace sdfc {

// Bias-free MLP trained with softmax cross-entropy; weights[i] = W_{i+1}.
struct BpNet {
    std::vector<std::size_t> layer_sizes;
    std::vector<Matrix> weights;
    Activation hidden_activation = Activation::relu;
    Activation output_activation = Activation::linear;
    std::vector<AdamState> adam;

    // Same Xavier draws as NetworkParams::create for the same sizes and seed.
    static BpNet create(const std::vector<std::size_t>& layer_sizes, std::uint64_t seed,
                        Activation hidden = Activation::relu);

    std::size_t num_layers() const { return weights.size(); }
    Activation activation_of(std::size_t layer) const {
        return layer + 1 == num_layers() ? output_activation : hidden_activation;
    }
};

using Gradients = std::vector<Matrix>;

// Output logits for a batch.
Matrix bp_forward(const BpNet& net, const Matrix& x);
std::vector<int> bp_predict(const BpNet& net, const Matrix& x);

// Mean softmax cross-entropy over the batch.
double cross_entropy(const BpNet& net, const Matrix& x, std::span<const int> labels);

// Exact gradients of cross_entropy by reverse-mode chain rule.
Gradients bp_grads(const BpNet& net, const Matrix& x, std::span<const int> labels);

// One Adam step per layer; returns the applied parameter change.
Gradients apply_adam(BpNet& net, const Gradients& grads, double lr);

} // namespace sdfc

#endif // SDFC_BASELINES_BP_HPP
