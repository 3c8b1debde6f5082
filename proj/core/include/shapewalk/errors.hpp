#pragma once

#include <stdexcept>
#include <string>

namespace shapewalk {

/// Operand lengths or graph orders do not agree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested size exceeds what the implementation will materialize.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands belong to different graphs or modes.
class IncompatibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value failed a structural invariant (e.g. a walker state outside S_K).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Linear solve failed: singular system or iterative non-convergence.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace shapewalk
