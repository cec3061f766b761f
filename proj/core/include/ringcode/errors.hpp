#pragma once

#include <stdexcept>
#include <string>

namespace ringcode {

/// Malformed or out-of-domain input parameters (bad field, unit, exponent, syntax).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition of an operation does not hold. Carries a
/// human-readable witness when one is available.
class PreconditionError : public std::logic_error {
 public:
  PreconditionError(const std::string& what, std::string witness = {})
      : std::logic_error(what), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// A search or enumeration would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invariant violated inside the library; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ringcode
