#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chainpart {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CycleError : public Error {
 public:
  using Error::Error;
};

class SelfLoopError : public Error {
 public:
  using Error::Error;
};

class VertexRangeError : public Error {
 public:
  using Error::Error;
};

class NotComparableError : public Error {
 public:
  using Error::Error;
};

class NotAntichainError : public Error {
 public:
  using Error::Error;
};

class NotMaximumAntichainError : public Error {
 public:
  using Error::Error;
};

class SizeMismatchError : public Error {
 public:
  using Error::Error;
};

class CapExceededError : public Error {
 public:
  using Error::Error;
};

class TooLargeError : public Error {
 public:
  using Error::Error;
};

class InvalidGrundyError : public Error {
 public:
  using Error::Error;
};

class WidthExceededError : public Error {
 public:
  using Error::Error;
};

class BadParameterError : public Error {
 public:
  using Error::Error;
};

class SizeCapError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// An on-line colorer emitted a chain index that breaks the chain property.
class InvalidMoveError : public Error {
 public:
  InvalidMoveError(std::size_t step, const std::string& what)
      : Error("invalid move at step " + std::to_string(step) + ": " + what), step_(step) {}

  /// 1-based position in the presentation order.
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// A structural claim checked at runtime did not hold.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace chainpart
