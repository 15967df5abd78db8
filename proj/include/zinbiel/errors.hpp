#ifndef ZINBIEL_ERRORS_HPP
#define ZINBIEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zinbiel {

// Tensor or matrix dimensions do not fit together.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called on input that violates its documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A matrix that has to be invertible is not.
class SingularMatrixError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Two independent evaluation routes disagreed. Always an implementation bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed user input (JSON payloads, rational literals, CLI values).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zinbiel

#endif  // ZINBIEL_ERRORS_HPP
