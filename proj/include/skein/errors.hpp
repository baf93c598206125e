#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skein {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero rational function") {}
};

/// A division that must be exact by construction left a remainder.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

class WidthMismatch : public Error {
 public:
  WidthMismatch(int lhs, int rhs)
      : Error("width mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidMatching : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace skein
