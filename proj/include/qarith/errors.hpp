#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qarith {

/// Base class for library errors that are not simple precondition
/// violations (those throw std::invalid_argument).
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed circuit text. Carries the 1-based line number of the offending line.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}

    [[nodiscard]] std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

/// An enumeration request exceeded the case budget.
class BudgetError : public Error {
  public:
    using Error::Error;
};

} // namespace qarith
