#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dualadd {

/// Argument outside the domain of an operation (index range, parameter range, pole).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A denominator factor vanished for the requested parameters.
/// `factors()` lists the offending factors in human-readable form.
class DegenerateParameterError : public DomainError {
 public:
  explicit DegenerateParameterError(std::vector<std::string> factors)
      : DomainError(join(factors)), factors_(std::move(factors)) {}

  const std::vector<std::string>& factors() const noexcept { return factors_; }

 private:
  static std::string join(const std::vector<std::string>& fs) {
    std::string out = "degenerate parameters: zero denominator factor(s)";
    for (std::size_t i = 0; i < fs.size(); ++i) {
      out += (i == 0 ? ": " : ", ");
      out += fs[i];
    }
    return out;
  }

  std::vector<std::string> factors_;
};

/// Surd bindings that do not satisfy u^2 = 1 - x^2 or v^2 = 1 - y^2.
class RelationViolationError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Numerical routine failed to reach the requested accuracy within its budget.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that must hold was observed to fail.
class IdentityViolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A limit sequence did not decay at the required rate.
class LimitViolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed configuration or command-line input.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dualadd
