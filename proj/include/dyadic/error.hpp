#pragma once

#include <stdexcept>
#include <string>

namespace dyadic {

/// Precondition or input-shape violation (bad depth, empty range, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value container received NaN or infinity.
class NonFiniteError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// An iterative routine stopped without meeting its tolerance.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, double last_bound)
      : std::runtime_error(what), last_bound_(last_bound) {}

  double last_bound() const noexcept { return last_bound_; }

 private:
  double last_bound_;
};

}  // namespace dyadic
