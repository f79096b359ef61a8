#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfchar {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (trees, forests, words, rationals, JSON payloads).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  explicit ParseError(const std::string& what) : Error(what), offset_(0) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A request exceeds a configured size cap (e.g. tree enumeration order).
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// A product or lookup would leave the degree range [0, N].
class TruncationOverflow : public Error {
 public:
  using Error::Error;
};

/// Operands live over different Hopf algebras, rings or truncations.
class IncompatibleError : public Error {
 public:
  using Error::Error;
};

/// Mathematical precondition failures: membership predicates, ideal
/// conditions, non-invertible elements. The CLI maps these to exit code 2.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Functional calculus applied outside the augmentation ideal.
class IdealViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The coefficient ring cannot divide by integers, so exp/log are undefined.
class UnsupportedRing : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An invariant the mathematics guarantees did not hold; indicates a bug.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace hopfchar
