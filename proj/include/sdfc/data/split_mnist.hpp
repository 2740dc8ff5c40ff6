#ifndef SDFC_DATA_SPLIT_MNIST_HPP
#define SDFC_DATA_SPLIT_MNIST_HPP

#include "sdfc/data/mnist.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sdfc {

enum class Paradigm { domain_il, class_il };

inline constexpr int kNumTasks = 5;

Paradigm parse_paradigm(std::string_view name);
std::string to_string(Paradigm p);

// Target label of a digit: parity for domain-IL, the digit itself for class-IL.
inline int map_label(int digit, Paradigm p) { return p == Paradigm::domain_il ? digit % 2 : digit; }
inline int num_outputs(Paradigm p) { return p == Paradigm::domain_il ? 2 : 10; }

// Task index (0-based) holding a digit: digits {2t, 2t+1} form task t.
inline int task_of_digit(int digit) { return digit / 2; }

struct Task {
    int index = 0;                      // 0-based; task i+1 in the 1..5 numbering
    std::array<int, 2> digit_pair{};
    Paradigm paradigm = Paradigm::domain_il;
    Matrix inputs;
    std::vector<int> targets;           // paradigm-mapped
    std::vector<int> digits;            // original digit per row
    std::vector<std::size_t> source_rows;  // row in the originating dataset

    std::size_t size() const { return targets.size(); }
};

struct TaskStream {
    Paradigm paradigm = Paradigm::domain_il;
    std::vector<Task> tasks;
};

TaskStream build_split_mnist(const MnistDataset& ds, Paradigm paradigm);

struct Batch {
    Matrix inputs;
    std::vector<int> labels;
};

// Row orderings of each batch; final partial batch kept.
std::vector<std::vector<std::size_t>> batch_indices(std::size_t n, std::size_t batch_size,
                                                    std::uint64_t rng_seed, bool shuffle);

Batch gather(const Matrix& inputs, const std::vector<int>& labels, const std::vector<std::size_t>& rows);

std::vector<Batch> batches(const Task& task, std::size_t batch_size, std::uint64_t rng_seed, bool shuffle);

} // namespace sdfc

#endif // SDFC_DATA_SPLIT_MNIST_HPP
