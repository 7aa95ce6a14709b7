#pragma once

#include <stdexcept>
#include <string>

namespace qsym {

/// Division by an element that is zero (or a zero divisor) in the coefficient ring.
class ZeroDivisor : public std::domain_error {
 public:
  explicit ZeroDivisor(const std::string& what) : std::domain_error(what) {}
};

/// A configured size or degree cap was hit; results would otherwise be truncated.
class ResourceCapExceeded : public std::runtime_error {
 public:
  explicit ResourceCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid construction parameters (dimension, split, index ranges, domains).
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

/// A value outside the domain of a real-valued formula (negative radicand, unbound energy).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace qsym
