#pragma once

#include <stdexcept>
#include <string>

namespace gkmod {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a documented precondition (non-dominant weight, irregular
// parameter, inconsistent embedding data, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Malformed text input (configuration files, rational literals, type names).
class ParseError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed a configured resource cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace gkmod
