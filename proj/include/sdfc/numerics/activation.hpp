#ifndef SDFC_NUMERICS_ACTIVATION_HPP
#define SDFC_NUMERICS_ACTIVATION_HPP

#include "sdfc/numerics/matrix.hpp"

#include <string>
#include <string_view>

namespace sdfc {

enum class Activation { tanh, relu, sigmoid, linear };

Matrix activate(Activation kind, const Matrix& v);

// Elementwise derivative phi'(v), evaluated at the pre-activation.
Matrix activate_derivative(Activation kind, const Matrix& v);

double activate(Activation kind, double v);

Activation parse_activation(std::string_view name);
std::string to_string(Activation kind);

} // namespace sdfc

#endif // SDFC_NUMERICS_ACTIVATION_HPP
