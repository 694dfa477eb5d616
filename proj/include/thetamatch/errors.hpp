#pragma once

#include <stdexcept>
#include <string>

namespace thetamatch {

/// Bad caller input: unknown vertex, missing or duplicate edge, out-of-range size.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed graph or polynomial text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// A theta specification that cannot be used (non-square-free, degree 0, q <= 0).
class ThetaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation's documented precondition does not hold for the given input.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An exponential search or oracle was asked to run beyond its configured bound.
class BoundError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A proven structural identity failed to hold. Always an implementation bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace thetamatch
