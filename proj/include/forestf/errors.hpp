#pragma once

#include <stdexcept>
#include <string>

namespace forestf {

// Malformed textual input (words, diagrams). `position` is a byte offset
// into the offending text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// An operation was called outside its contract (e.g. anti-normal form of a
// non-strongly-positive element).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration exceeded its configured resource budget. Partial results
// are discarded.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace forestf
