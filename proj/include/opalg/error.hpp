#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace opalg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `position()` is a byte offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotMultilinear : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ShapeMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A rewrite produced a monomial that is not strictly below the rewritten one.
class OrderViolation : public Error {
 public:
  using Error::Error;
};

/// Reduction ran out of fuel where a complete normal form was required.
class FuelExhausted : public Error {
 public:
  using Error::Error;
};

/// A quotient was requested over generators that failed the GS check.
class QuotientRefused : public Error {
 public:
  using Error::Error;
};

}  // namespace opalg
