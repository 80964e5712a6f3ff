#pragma once

#include <stdexcept>
#include <string>

namespace cpf {

// Violated precondition on a mathematical input (reducible modulus, constant
// polynomial where a non-constant one is required, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed polynomial / field element / table text.
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An exhaustive operation would exceed its EnumerationGuard budget.
class GuardExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

// An internal invariant failed. Never caused by valid input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cpf
