#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unipv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Raised when an argument violates a documented precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Raised by numeric routines (pole on path, refinement cap exceeded).
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace unipv
