#ifndef SDFC_BASELINES_TRAINING_HPP
#define SDFC_BASELINES_TRAINING_HPP

#include "sdfc/baselines/ewc.hpp"
#include "sdfc/baselines/si.hpp"
#include "sdfc/data/split_mnist.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sdfc {

struct BatchReport {
    double accuracy = 0.0;  // on the batch, from the forward pass before the update
    int steps = 0;          // integration steps (DFC only)
    bool converged = true;
};

// Anything trainable batch by batch on a task stream. Boundary information is
// only delivered to learners that declare they use it.
class Learner {
public:
    virtual ~Learner() = default;
    virtual BatchReport train_batch(const Matrix& x, std::span<const int> labels) = 0;
    virtual std::vector<int> predict(const Matrix& x) const = 0;
    virtual bool uses_task_boundaries() const = 0;
    virtual void end_task(const Task& task) = 0;
};

enum class BaselineMethod { bp, ewc, si };

BaselineMethod parse_baseline(std::string_view name);
std::string to_string(BaselineMethod m);

struct BaselineOptions {
    double lr = 1e-3;
    double coefficient = 0.0;       // c_ewc or c_si
    std::size_t fisher_samples = 2000;
    double si_damping = 0.1;
    std::uint64_t seed = 0;         // Fisher sampling
};

class BaselineLearner final : public Learner {
public:
    BaselineLearner(BaselineMethod method, BpNet net, BaselineOptions opts);

    BatchReport train_batch(const Matrix& x, std::span<const int> labels) override;
    std::vector<int> predict(const Matrix& x) const override { return bp_predict(net_, x); }
    bool uses_task_boundaries() const override { return method_ != BaselineMethod::bp; }
    void end_task(const Task& task) override;

    const BpNet& net() const { return net_; }
    const EwcState& ewc() const { return ewc_; }
    const SiState& si() const { return si_; }
    int boundaries_seen() const { return boundaries_; }

private:
    BaselineMethod method_;
    BpNet net_;
    BaselineOptions opts_;
    EwcState ewc_;
    SiState si_;
    int boundaries_ = 0;
};

struct TaskTrainOptions {
    int epochs = 4;
    std::optional<double> early_stop_accuracy;  // stop once a batch reaches it
    int max_epochs = 10;                        // cap under early stopping
    std::size_t batch_size = 512;
    std::uint64_t shuffle_seed = 0;
};

struct TaskTrainStats {
    int batches = 0;
    int epochs_started = 0;
    bool stopped_early = false;
    std::vector<double> batch_accuracy;
    int unconverged_batches = 0;
};

// Trains one task; fires learner.end_task afterwards only when the learner
// uses boundaries.
TaskTrainStats train_task(Learner& learner, const Task& task, const TaskTrainOptions& opts);

} // namespace sdfc

#endif // SDFC_BASELINES_TRAINING_HPP
