#ifndef SDFC_ANALYSIS_SEPARATION_HPP
#define SDFC_ANALYSIS_SEPARATION_HPP

#include "sdfc/numerics/matrix.hpp"

#include <array>
#include <map>
#include <optional>

namespace sdfc {

// 1 - cosine similarity of the per-neuron summed absolute activity of two
// sample sets (rows = samples). Empty when either summed vector is all zero.
// Throws ShapeError on empty input or differing neuron counts.
std::optional<double> representational_separation(const Matrix& acts_a, const Matrix& acts_b);

struct SeparationReport {
    std::array<std::array<std::optional<double>, 10>, 10> pairwise{};
    double intra = 0.0;          // mean over same-parity digit pairs
    double inter = 0.0;          // mean over cross-parity digit pairs
    double normalized = 0.0;     // inter - intra
    double mean_pairwise = 0.0;  // mean over all digit pairs
    int intra_pairs = 0;         // pairs with a defined separation
    int inter_pairs = 0;
    int missing_pairs = 0;
};

// Pairwise separations of digits 0..9 grouped by parity label. Pairs whose
// separation is undefined are skipped and counted. Throws std::invalid_argument
// when a digit is absent.
SeparationReport label_separation_summary(const std::map<int, Matrix>& acts_by_digit);

} // namespace sdfc

#endif // SDFC_ANALYSIS_SEPARATION_HPP
