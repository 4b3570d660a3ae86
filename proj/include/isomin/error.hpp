#pragma once

#include <stdexcept>
#include <string>

namespace isomin {

/// Violated precondition or malformed input (bad bounds, wrong sizes,
/// unordered curvatures, unknown names).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Base for failures of a numerical procedure on otherwise valid input.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoConvergence : public NumericalError {
 public:
  NoConvergence(const std::string& what, double residual)
      : NumericalError(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// The tangential gradient of the defining field vanishes: the level set is
/// not a hypersurface at this point.
class FocalPoint : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Input sits on a degenerate configuration (coinciding curvatures, S = 0).
class Degenerate : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ComplexRoots : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace isomin
