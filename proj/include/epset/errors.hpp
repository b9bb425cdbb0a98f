#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace epset {

// A word contains a digit outside {0..b-1}.
class InvalidWordError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Caller broke a documented precondition (bad parameter, non-complete input, ...).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An internal invariant failed. Indicates a bug rather than bad input.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A size guard refused the computation.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace epset
