#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zkw {

/// Malformed input text (complex expressions, Whitehead expressions, chain text).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                           std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Input that parses but violates a precondition (overlapping labels, non-cycles, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A desk-scale size bound was exceeded; the bound is part of the message.
class SizeLimitError : public std::length_error {
 public:
  SizeLimitError(const std::string& what, std::size_t bound)
      : std::length_error(what + " (bound " + std::to_string(bound) + ")"), bound_(bound) {}
  std::size_t bound() const { return bound_; }

 private:
  std::size_t bound_;
};

/// An internal consistency check failed (d^2 != 0, a staircase solve failed, ...).
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace zkw
