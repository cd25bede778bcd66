#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diffideal {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings, or a polynomial mentions a symbol the
/// ring does not declare.
class RingMismatch : public Error {
public:
  using Error::Error;
};

class DivisionByZero : public Error {
public:
  using Error::Error;
};

/// Argument outside an operation's domain (zero scalar, variable-dependent
/// rescaling factor, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Ideal is not zero-dimensional where that is required.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// An iteration cap was exceeded. In a Noetherian ring this signals a bug.
class IterationLimit : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        message_(what), line_(line), column_(column) {}

  /// The message without the position prefix.
  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

} // namespace diffideal
