#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wreath {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A configured size limit would be exceeded. Carries the limit name so the
/// CLI can tell the user which `--budget-*` flag to raise.
class BudgetExceeded : public Error {
public:
  BudgetExceeded(std::string budget, std::string what)
      : Error(what), budget_(std::move(budget)) {}
  const std::string& budget() const noexcept { return budget_; }

private:
  std::string budget_;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

class DegreeMismatch : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

class UnknownFamily : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

class NotSemiprimitive : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

/// Syntax error in cycle notation or a group spec; column is 1-based.
class ParseError : public InvalidArgument {
public:
  ParseError(std::size_t column, const std::string& msg)
      : InvalidArgument("column " + std::to_string(column) + ": " + msg),
        column_(column) {}
  std::size_t line() const noexcept { return 1; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t column_;
};

/// Burnside sum not divisible by the group order. Only a bug can raise this.
class DivisibilityViolation : public Error {
public:
  using Error::Error;
};

}  // namespace wreath
