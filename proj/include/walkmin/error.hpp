#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace walkmin {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Syntax error in an expression, DIMACS file or similar textual input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_ = 0;
};

class UnknownVertexError : public Error {
 public:
  using Error::Error;
};

// Thrown when an operation would exceed a configured size cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace walkmin
