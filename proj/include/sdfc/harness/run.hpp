#ifndef SDFC_HARNESS_RUN_HPP
#define SDFC_HARNESS_RUN_HPP

#include "sdfc/analysis/records.hpp"
#include "sdfc/baselines/training.hpp"
#include "sdfc/dfc/updates.hpp"
#include "sdfc/harness/config.hpp"

#include <atomic>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sdfc {

// DFC behind the Learner interface. It never consumes task boundaries;
// end_task counts the call and throws so a leak cannot go unnoticed.
class DfcTaskLearner final : public Learner {
public:
    DfcTaskLearner(NetworkParams params, DfcConfig cfg) : learner_(std::move(params), std::move(cfg)) {}

    BatchReport train_batch(const Matrix& x, std::span<const int> labels) override;
    std::vector<int> predict(const Matrix& x) const override { return sdfc::predict(learner_.params(), x); }
    bool uses_task_boundaries() const override { return false; }
    void end_task(const Task& task) override;

    int boundary_calls() const { return boundary_calls_; }
    const DfcLearner& dfc() const { return learner_; }

private:
    DfcLearner learner_;
    int boundary_calls_ = 0;
};

// Training tasks and the paradigm-labelled test set, shared read-only by runs.
struct RunData {
    TaskStream train;
    MnistDataset test;
    std::vector<int> test_labels;              // paradigm-mapped
    std::array<std::vector<std::size_t>, kNumTasks> test_rows_by_task;

    static RunData build(const MnistDataset& train, const MnistDataset& test, Paradigm paradigm);
};

struct RunRecord {
    std::string label;                // method, plus any sweep variant
    Method method = Method::bp;
    Paradigm paradigm = Paradigm::domain_il;
    double lr = 0.0;
    std::uint64_t seed = 0;
    std::string fingerprint;
    bool failed = false;
    std::string failure;

    // task_accuracy[i][j]: test accuracy on task j's digits after training task i.
    std::vector<std::vector<double>> task_accuracy;
    std::vector<double> whole_accuracy;  // whole test set after each task
    std::vector<double> cumulative;      // mean of task_accuracy[i][0..i]
    double final_accuracy = 0.0;

    int batches = 0;
    int unconverged_batches = 0;
    int boundary_calls = 0;              // received by the learner
    double wall_seconds = 0.0;

    std::optional<ActivationArchive> records;
};

std::unique_ptr<Learner> make_learner(const ExperimentConfig& cfg, std::uint64_t seed);

// Trains tasks 1..5 in order and evaluates after each. `cfg` must be resolved.
// Divergence ends the run early with failed = true. Activation records are
// taken when cfg.record is set and the method is a DFC variant.
RunRecord run_single(const ExperimentConfig& cfg, std::uint64_t seed, const RunData& data,
                     const std::string& label = {});

// Test samples recorded for each digit: up to `per_digit`, chosen by seed.
std::array<std::vector<std::size_t>, 10> record_sample_rows(const MnistDataset& test, std::size_t per_digit,
                                                            std::uint64_t seed);

} // namespace sdfc

#endif // SDFC_HARNESS_RUN_HPP
