#pragma once

#include <stdexcept>

namespace ecdlp {

// Bad input: composite modulus, point off the curve, malformed text, ...
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ModulusMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ZeroInversion : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An enumeration or search would exceed its configured size guard.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A property that must hold by construction was observed to fail.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ecdlp
