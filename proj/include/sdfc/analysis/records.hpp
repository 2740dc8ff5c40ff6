#ifndef SDFC_ANALYSIS_RECORDS_HPP
#define SDFC_ANALYSIS_RECORDS_HPP

#include "sdfc/data/split_mnist.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace sdfc {

// target: settled activity with controller and gating; feedforward: phi(v_ff).
enum class RecordKind : std::uint8_t { target = 0, feedforward = 1 };

std::string to_string(RecordKind k);

struct ActivationRecord {
    int layer = 0;   // 1-based hidden layer index
    int digit = 0;
    int task = 0;    // 1-based task that contains the digit
    int stage = 0;   // 1-based: recorded after training on this task
    RecordKind kind = RecordKind::target;
    Matrix acts;     // samples x neurons; same samples for a digit at every stage
};

struct ActivationArchive {
    inline static constexpr std::uint32_t kVersion = 1;

    std::vector<ActivationRecord> records;

    const ActivationRecord* find(int digit, int stage, RecordKind kind) const;
};

void save_records(const std::filesystem::path& path, const ActivationArchive& archive);
ActivationArchive load_records(const std::filesystem::path& path);

// One value of a representation metric; task 0 marks an average over tasks.
// Empty when the metric is undefined for these records (missing stage, zero
// activity, single-class fit).
struct MetricValue {
    std::string metric;
    int task = 0;
    std::optional<double> value;
};

// Every metric the records support:
//   sep_final_*    separation of all digits' targets after the last task
//   sep_learned_*  separation of each digit's targets when its task was learned
//   erank          effective rank of each task's targets when learned
//   gamma          unaltered previous dimensionality, tasks 2..5
//   alpha          domain-IL only, old hyperplane accuracy on new targets, tasks 2..5
//   beta           domain-IL only, feedforward movement toward the task's own
//                  hyperplane by the end of training, tasks 1..4
std::vector<MetricValue> analyze_records(const ActivationArchive& archive, Paradigm paradigm);

} // namespace sdfc

#endif // SDFC_ANALYSIS_RECORDS_HPP
