// errors.hpp — Exception types used across the library.
//
// The CLI maps these onto exit codes: usage errors -> 2, numeric failures
// (singular systems, divergent rates, failed quadrature) -> 3, I/O -> 4.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ringabs {

// A parameter violated a model invariant. Carries every violated constraint.
class InvalidParameter : public std::invalid_argument {
 public:
  explicit InvalidParameter(std::vector<std::string> violations)
      : std::invalid_argument(join(violations)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string msg = "invalid parameters:";
    for (const auto& s : v) msg += " [" + s + "]";
    return msg;
  }
  std::vector<std::string> violations_;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonCirculantInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numeric failures (CLI exit code 3).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularSystem : public NumericError {
 public:
  using NumericError::NumericError;
};

// Gamma_T = 0 with nonzero dephasing: dark populations grow without bound.
class DegenerateSink : public NumericError {
 public:
  using NumericError::NumericError;
};

// beta = 0 exactly makes the Ohmic rate 2*fbar/beta divergent.
class InfiniteTemperatureRate : public NumericError {
 public:
  using NumericError::NumericError;
};

class SlowConvergence : public NumericError {
 public:
  using NumericError::NumericError;
};

class QuadratureNotConverged : public NumericError {
 public:
  using NumericError::NumericError;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ringabs
