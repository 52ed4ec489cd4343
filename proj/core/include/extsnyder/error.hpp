#pragma once

#include <stdexcept>
#include <string>

namespace extsnyder {

// Bad parameter values or arguments outside an operation's domain.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inconsistent objects: unknown modes, operators on different bases.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Basis would exceed the configured dimension cap.
class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace extsnyder
