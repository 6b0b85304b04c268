#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dforge {

// Input outside an operation's mathematical domain (negative digit-sum
// argument, odd base for the value polynomial, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A variable needed for evaluation has no binding.
class UnboundVariable : public DomainError {
 public:
  explicit UnboundVariable(const std::string& name)
      : DomainError("unbound variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

// A computation would exceed a configured size limit (term budget,
// enumeration cap, bit-length guard). Never a silent truncation.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The hypotheses of a theorem-level check are not met.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal invariant broken; indicates a defect, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                           std::to_string(column)),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace dforge
