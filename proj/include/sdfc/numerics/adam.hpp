#ifndef SDFC_NUMERICS_ADAM_HPP
#define SDFC_NUMERICS_ADAM_HPP

#include "sdfc/numerics/matrix.hpp"

#include <cstdint>
#include <span>
#include <utility>

namespace sdfc {

struct AdamState {
    Matrix first_moment;
    Matrix second_moment;
    std::int64_t step = 0;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;

    static AdamState zeros_like(const Matrix& params);
};

// Bias-corrected Adam step; pure form.
std::pair<Matrix, AdamState> adam_step(const AdamState& state, const Matrix& params,
                                       const Matrix& grad, double lr);

// In-place form used by the trainers. When `row_eligible` is non-empty, rows
// flagged false keep their parameters and moment estimates bit-identical;
// the step counter still advances.
void adam_update(AdamState& state, Matrix& params, const Matrix& grad, double lr,
                 std::span<const std::uint8_t> row_eligible = {});

} // namespace sdfc

#endif // SDFC_NUMERICS_ADAM_HPP
