#pragma once

#include <stdexcept>
#include <string>

namespace riesz {

/// Base of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (e.g. zeta at sigma <= 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised instead of returning a value dominated by cancellation noise.
class InsufficientPrecision : public Error {
 public:
  InsufficientPrecision(const std::string& what, unsigned required_bits)
      : Error(what), required_bits_(required_bits) {}
  [[nodiscard]] unsigned required_bits() const { return required_bits_; }

 private:
  unsigned required_bits_;
};

/// Unknown experiment name.
class CatalogError : public Error {
 public:
  using Error::Error;
};

}  // namespace riesz
