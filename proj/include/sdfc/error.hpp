#ifndef SDFC_ERROR_HPP
#define SDFC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sdfc {

// Thrown when operand shapes do not chain or match.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A fit that cannot be posed, e.g. single-class logistic regression.
class DegenerateFitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Network dynamics left the finite regime (|v| > 1e6 or NaN).
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input file (IDX, checkpoint, activation records, config).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sdfc

#endif // SDFC_ERROR_HPP
