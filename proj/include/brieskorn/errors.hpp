#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brieskorn {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Polynomial text that does not follow the grammar; `position` is the byte
/// offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NotACriticalPoint : public Error {
 public:
  using Error::Error;
};

class NonIsolatedSingularity : public Error {
 public:
  using Error::Error;
};

class InvalidWeights : public Error {
 public:
  using Error::Error;
};

}  // namespace brieskorn
