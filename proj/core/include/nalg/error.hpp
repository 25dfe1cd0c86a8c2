#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nalg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands live over different fields") {}
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class NotEnoughElements : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Input text did not conform to a grammar. `position` is a 0-based offset
/// into the offending text (or line, for file formats).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), detail_(message), position_(position) {}
  /// Diagnostic inside a file; `column` is 1-based.
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        detail_(message),
        position_(column - 1),
        line_(line) {}

  const std::string& detail() const { return detail_; }
  /// 0-based offset within the parsed text (or line).
  std::size_t position() const { return position_; }
  /// 1-based line for file diagnostics, 0 otherwise.
  std::size_t line() const { return line_; }

 private:
  std::string detail_;
  std::size_t position_;
  std::size_t line_ = 0;
};

class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

class NotComposable : public Error {
 public:
  using Error::Error;
};

class DiagramInvalid : public Error {
 public:
  using Error::Error;
};

class NotAssociative : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class DegreeTooSmall : public Error {
 public:
  using Error::Error;
};

/// A precondition that has no dedicated error type (e.g. a theorem hypothesis).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace nalg
