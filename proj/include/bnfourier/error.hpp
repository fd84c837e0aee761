#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace bnf {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: arity mismatches, out-of-range
/// probabilities, syntax errors in network files, and so on.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A dense truth table or spectrum would exceed the configured arity cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string what, std::size_t arity, std::size_t cap)
      : Error(std::move(what)), arity_(arity), cap_(cap) {}

  std::size_t arity() const noexcept { return arity_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t arity_;
  std::size_t cap_;
};

/// Syntax or structural error in network DSL text. Line and column are
/// 1-based; column is 0 when the error concerns a whole line.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : InputError(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) return message;
    std::string where = "line " + std::to_string(line);
    if (column != 0) where += ", column " + std::to_string(column);
    return where + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace bnf
