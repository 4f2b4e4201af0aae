#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

// Thrown when an iterative numerical procedure cannot reach its requested
// tolerance within its budget.  Carries the best value computed so far and
// the bound on its error so callers can decide whether to degrade
// gracefully or abort.
class NumericsError : public std::runtime_error {
 public:
  NumericsError(const std::string& message, double partial_value,
                double error_bound)
      : std::runtime_error(message),
        partial_(partial_value),
        bound_(error_bound) {}

  double partial_value() const { return partial_; }
  double error_bound() const { return bound_; }

 private:
  double partial_;
  double bound_;
};

// Thrown for filesystem failures (unwritable output path, unreadable CSV).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& message)
      : std::runtime_error(message) {}
};

}  // namespace casimir
