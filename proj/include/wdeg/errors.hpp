#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wdeg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition (dimension mismatch, zero
/// polynomial where a nonzero one is required, unsupported hypothesis, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A resource budget was exhausted before an answer was reached.  Never
/// accompanied by a partial (possibly wrong) answer.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations that must agree did not.  Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in the textual polynomial grammar.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError(what + " at line " + std::to_string(line) + ", column " +
                   std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace wdeg
