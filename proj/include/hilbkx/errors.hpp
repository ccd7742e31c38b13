#ifndef HILBKX_ERRORS_HPP
#define HILBKX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hilbkx {

// Vector or matrix argument of the wrong length/shape.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The input does not satisfy a hypothesis the computation is stated under
// (for instance p_g > 0 for localization).
class HypothesisViolated : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A parity that holds unconditionally was observed to fail. Only an
// arithmetic or construction bug can raise this.
class ParityFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace hilbkx

#endif  // HILBKX_ERRORS_HPP
