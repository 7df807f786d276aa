#pragma once

#include <stdexcept>
#include <string>

namespace hyperlift {

/// Input text failed to parse. Positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int column() const { return col_; }

 private:
  int line_;
  int col_;
};

/// A computation would exceed a configured size or enumeration budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A certificate pipeline's base coloring failed its own avoidance check.
class BaseCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyperlift
