#ifndef SDFC_NUMERICS_MATRIX_HPP
#define SDFC_NUMERICS_MATRIX_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <string>

namespace sdfc {

// Dense row-major 64-bit matrix. Rows are samples wherever a matrix holds a
// batch of activations; weights are stored (fan_out x fan_in).
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using RowVector = Eigen::RowVectorXd;

inline bool all_finite(const Matrix& m) { return m.allFinite(); }

void require_same_shape(const Matrix& a, const Matrix& b, const char* what);

std::string shape_string(const Matrix& m);

} // namespace sdfc

#endif // SDFC_NUMERICS_MATRIX_HPP
