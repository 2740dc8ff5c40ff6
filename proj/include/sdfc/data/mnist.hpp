#ifndef SDFC_DATA_MNIST_HPP
#define SDFC_DATA_MNIST_HPP

#include "sdfc/numerics/matrix.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace sdfc {

enum class Split { train, test };

inline constexpr std::uint32_t kIdxImageMagic = 0x00000803;
inline constexpr std::uint32_t kIdxLabelMagic = 0x00000801;
inline constexpr int kMnistPixels = 28 * 28;

struct MnistDataset {
    Matrix images;              // n x 784, pixel / 255
    std::vector<int> labels;    // digit 0..9 per row
    Split split = Split::train;

    std::size_t size() const { return labels.size(); }
};

// Parses an IDX image/label file pair. Either file may be gzip-compressed.
// Throws ParseError on bad magic, truncation, or a count mismatch.
MnistDataset load_mnist_idx(const std::filesystem::path& images_path,
                            const std::filesystem::path& labels_path, Split split = Split::train);

// Loads `train-*` or `t10k-*` files (optionally with a .gz suffix) from `dir`
// and checks the standard sample count (60000 / 10000).
MnistDataset load_mnist_dir(const std::filesystem::path& dir, Split split);

// Deterministic per-digit subsample keeping `fraction` of each digit's rows.
MnistDataset subsample(const MnistDataset& ds, double fraction, std::uint64_t seed);

} // namespace sdfc

#endif // SDFC_DATA_MNIST_HPP
