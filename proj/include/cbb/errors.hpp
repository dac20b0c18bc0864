#pragma once

#include <stdexcept>
#include <string>

namespace cbb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different variable contexts, or an argument is outside
/// the domain of an operation (zero polynomial where a nonzero one is needed,
/// arity mismatch, malformed order ideal, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A parameter fraction was evaluated at a zero of its denominator.
class PoleError : public Error {
 public:
  using Error::Error;
};

class NotZeroDimensional : public Error {
 public:
  using Error::Error;
};

/// The parameter variety has a point with a non-rational coordinate.
class NonRationalPoint : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace cbb
