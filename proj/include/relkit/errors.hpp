#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand carriers do not line up for the requested operation.
class TypeError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A property guaranteed by the theory failed to hold on a computed value.
/// Seeing one of these means there is a bug in relkit.
class LawViolation : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration or search would exceed its size limit.
class BudgetError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace relkit
