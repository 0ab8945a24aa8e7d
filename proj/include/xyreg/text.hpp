#pragma once

#include <string>
#include <string_view>

#include "xyreg/polynomial.hpp"
#include "xyreg/variables.hpp"

namespace xyreg {

/// Parses the polynomial text grammar:
///
///   polynomial ::= ['-'] term (('+'|'-') term)*
///   term       ::= coeff | [coeff '*'] factor ('*' factor)*
///   factor     ::= ('x'|'y') '[' i ',' j ']' ['^' e]
///   coeff      ::= integer | integer '/' integer
///
/// Whitespace is insignificant, indices are 1-based. Throws ParseError (with the byte
/// offset) on bad syntax and DomainError for indices outside 1..n.
Polynomial parse_poly(std::string_view text, const VariableTable& table, Field field, OrderPtr order);

std::string format_monomial(const Monomial& m, const VariableTable& table);
/// Inverse of parse_poly: parse_poly(format_poly(p)) == p.
std::string format_poly(const Polynomial& p, const VariableTable& table);

/// Parses a monomial written as a product of factors, or "1".
Monomial parse_monomial(std::string_view text, const VariableTable& table);

}  // namespace xyreg
