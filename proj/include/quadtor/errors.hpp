#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quadtor {

/// Precondition violated by the caller (zero radicand, mixed fields, m out of range...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Weierstrass data with vanishing discriminant.
class SingularCurveError : public DomainError {
 public:
  explicit SingularCurveError(const std::string& discriminant_report)
      : DomainError("singular curve: " + discriminant_report) {}
};

/// A computed result contradicts a known classification; signals an arithmetic bug.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed curve-database line or CLI argument.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line_number, const std::string& what)
      : std::runtime_error(line_number == 0 ? what
                                            : "line " + std::to_string(line_number) + ": " + what),
        line_(line_number) {}

  std::size_t line_number() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace quadtor
