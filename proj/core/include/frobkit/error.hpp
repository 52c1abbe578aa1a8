#pragma once

#include <stdexcept>
#include <string>

namespace frobkit {

// Base class for every error raised by the library. `kind()` is a stable
// machine-readable tag used in JSON reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error("invalid_argument", what) {}
};

class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& what = "division by zero")
      : Error("division_by_zero", what) {}
};

class RankMismatch : public Error {
 public:
  explicit RankMismatch(const std::string& what) : Error("rank_mismatch", what) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error("budget_exceeded", what) {}
};

class InfiniteDimensional : public Error {
 public:
  explicit InfiniteDimensional(const std::string& what)
      : Error("infinite_dimensional", what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("parse_error", what), line_(line), column_(column) {}
  explicit ParseError(const std::string& what) : ParseError(what, 0, 0) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Resource guards. Every search that is not a priori bounded consults one of
// these limits and raises BudgetExceeded when it is hit.
struct Budget {
  std::size_t spair_limit = 200000;   // S-pairs per Buchberger run
  std::size_t chain_limit = 64;       // levels of a stable-image chain
  std::size_t saturation_limit = 64;  // quotient rounds in saturate()
  std::size_t point_guard = 1000000;  // candidates in point enumeration
};

}  // namespace frobkit
