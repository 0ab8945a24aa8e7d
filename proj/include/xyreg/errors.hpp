#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xyreg {

/// Operands built over rings of different sizes.
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Leading term requested of the zero polynomial.
class UndefinedLeadError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Operands tagged with different monomial orders or coefficient fields.
class ContextMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation (n < 2, bad index, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class NonHomogeneousError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A Groebner computation hit its pair or degree budget. No partial result is kept.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace xyreg
