#ifndef SDFC_HARNESS_CONFIG_HPP
#define SDFC_HARNESS_CONFIG_HPP

#include "sdfc/data/split_mnist.hpp"
#include "sdfc/dfc/network.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sdfc {

enum class Method { bp, ewc, si, dfc, dfc_sparse, dfc_rec, dfc_sparse_rec };

Method parse_method(std::string_view name);
std::string to_string(Method m);
bool is_dfc(Method m);
bool uses_sparsity(Method m);
bool uses_recurrence(Method m);

// Sparsity levels per layer (hidden..., output) used by the sparse DFC variants.
std::vector<double> default_sparsity(Paradigm p);
std::vector<std::size_t> default_hidden_sizes(Paradigm p);
double default_coefficient(Method m, Paradigm p);

// n values spaced evenly in log10 between lo and hi, both included.
std::vector<double> log_grid(double lo, double hi, std::size_t n);
std::vector<double> default_lr_grid();

// Everything a run or sweep needs. Optional fields fall back to the
// method/paradigm defaults in resolved().
struct ExperimentConfig {
    Method method = Method::dfc_sparse_rec;
    Paradigm paradigm = Paradigm::domain_il;
    std::vector<std::size_t> hidden;          // empty: default for the paradigm
    double lr = 1e-3;
    std::vector<double> lr_grid;              // empty: default grid
    std::vector<std::uint64_t> seeds{0};
    int epochs = 4;
    std::optional<double> early_stop;         // batch-accuracy threshold
    std::vector<double> early_stop_grid;
    int max_epochs = 10;
    std::size_t batch_size = 512;
    double train_fraction = 1.0;              // per-digit training subsample
    std::uint64_t subsample_seed = 0;
    std::size_t window = 6;                   // LRs per summary window

    // DFC; sparsity empty = default for sparse variants, ignored otherwise.
    DfcConfig dfc;
    std::optional<std::vector<double>> sparsity;

    // Baselines; coefficient unset = table default.
    std::optional<double> coefficient;
    std::size_t fisher_samples = 2000;
    double si_damping = 0.1;

    // sweep-grid: dimension in {sparsity, rho, recurrent_lr}; one entry per
    // grid point (a full level vector for sparsity, one value otherwise).
    std::string grid_dimension;
    std::vector<std::vector<double>> grid_values;

    bool record = false;
    std::size_t record_per_digit = 1000;

    std::string data_dir = "data/mnist";
    std::string out_dir = "results";
    int jobs = 1;

    // Copy with every default filled in and the DFC switches set from the
    // method. Throws std::invalid_argument for inconsistent settings.
    ExperimentConfig resolved() const;

    // DfcConfig for this method (sparsity and recurrence applied).
    DfcConfig dfc_config() const;
    std::vector<std::size_t> layer_sizes() const;
};

nlohmann::json to_json(const ExperimentConfig& cfg);
// Missing keys keep the defaults; unknown keys are rejected.
ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig base = {});
ExperimentConfig load_config(const std::filesystem::path& path, ExperimentConfig base = {});

// Stable hex digest of the resolved config (seed and output paths excluded).
std::string fingerprint(const ExperimentConfig& cfg);

} // namespace sdfc

#endif // SDFC_HARNESS_CONFIG_HPP
