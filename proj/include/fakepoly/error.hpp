#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fakepoly {

/// Contract violation on a library call (wrong arity, empty input, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// DSL or matrix syntax error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        detail_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

}  // namespace fakepoly
