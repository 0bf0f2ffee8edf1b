#ifndef SOBOLEV2D_ERRORS_HPP
#define SOBOLEV2D_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sobolev2d {

/// A weight parameter lies outside the admissible domain.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A parameter is inside the nominal domain but makes a closed-form
/// coefficient singular (Gegenbauer alpha = 0).
class SingularParameterError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

/// An internal invariant failed; valid inputs must never produce this.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace sobolev2d

#endif  // SOBOLEV2D_ERRORS_HPP
