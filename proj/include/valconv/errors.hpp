#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace valconv {

// Base class for every error the library raises on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& where)
      : Error("dimension mismatch in " + where) {}
};

class EmptyIntersection : public Error {
 public:
  EmptyIntersection() : Error("family has empty intersection") {}
};

class TooFewPoints : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace valconv
