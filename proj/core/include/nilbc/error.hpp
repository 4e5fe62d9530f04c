#pragma once

#include <stdexcept>
#include <string>

namespace nilbc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Division by zero and other arithmetic domain violations.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// Structural misuse: mismatched coframe dimensions, out-of-range bidegrees.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        message_(message),
        line_(line),
        column_(column) {}

  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

// Input is well-formed but violates a mathematical constraint (d^2 != 0,
// unbound parameter, inconsistent modulus, predicate violation).
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace nilbc
