#pragma once

#include <stdexcept>
#include <string>

namespace qogz {

/// Raised when a field division has a zero divisor.
class DivisionByZero : public std::domain_error {
 public:
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// Operands live in incompatible parameter spaces (different cyclotomic
/// orders, different algebra specs, different group parameters).
class ParameterMismatch : public std::invalid_argument {
 public:
  explicit ParameterMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed text input (scalar / polynomial grammar, campaign files).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation would exceed a configured size limit (group enumeration).
class SizeLimitExceeded : public std::runtime_error {
 public:
  explicit SizeLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qogz
