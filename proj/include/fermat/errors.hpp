#pragma once

#include <stdexcept>
#include <string>

namespace fermat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Operands live in different rings or coefficient fields.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(format(what, line, column)), detail_(what), line_(line), column_(column) {}

  /// Message without the position prefix.
  const std::string& detail() const { return detail_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    if (line <= 0 && column <= 0) return what;
    if (line <= 0) return "column " + std::to_string(column) + ": " + what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }
  std::string detail_;
  int line_;
  int column_;
};

/// Thrown when the per-computation wall-clock budget runs out.
class Timeout : public Error {
 public:
  Timeout() : Error("computation exceeded its time budget") {}
};

/// A bounded scan reached its cap without an answer.
class ScanCapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace fermat
