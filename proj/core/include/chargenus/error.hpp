#pragma once

#include <stdexcept>
#include <string>

namespace chargenus {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by an exact zero.
class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A precondition on the arguments of an operation was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree did not; indicates a bug, not bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (polynomials, catalogs, models).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace chargenus
