#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "xyreg/certificate.hpp"
#include "xyreg/field.hpp"
#include "xyreg/order.hpp"
#include "xyreg/polynomial.hpp"
#include "xyreg/variables.hpp"

namespace xyreg {

/// K[x_ij, y_ij] for n x n generic matrices X, Y. DomainError for n < 2.
VariableTable build_ring(std::size_t n);

/// Lexicographic order with precedence
///   x11 > x22 > ... > xnn                       (diagonal)
///   > x12 > x23 > ... > x(n-1)n                 (band offset 1)
///   > ... > x1n                                 (band offset n-1)
///   > x[i,j] for i > j, row-major
///   > y[k,l], row-major.
OrderPtr diagonal_band_order(std::size_t n);

/// The entries f_ij = sum_k x_ik y_kj of XY, over a chosen field and order.
class GenericProduct {
public:
  GenericProduct(std::size_t n, Field field, OrderPtr order);
  /// Default field GF(32003) and the diagonal-band order.
  explicit GenericProduct(std::size_t n);

  std::size_t n() const noexcept { return table_.n(); }
  const VariableTable& table() const noexcept { return table_; }
  const Field& field() const noexcept { return field_; }
  const OrderPtr& order() const noexcept { return order_; }

  Polynomial x(std::size_t i, std::size_t j) const;
  Polynomial y(std::size_t i, std::size_t j) const;
  /// DomainError for indices outside 1..n.
  Polynomial f(std::size_t i, std::size_t j) const;

private:
  VariableTable table_;
  Field field_;
  OrderPtr order_;
};

Polynomial entry_f(std::size_t n, std::size_t i, std::size_t j);

/// k_t = 1 + (floor(n / t) - 1) t. DomainError unless 1 <= t <= n.
std::size_t k_value(std::size_t n, std::size_t t);
/// Selected rows of column t: 1, 1 + t, ..., k_t.
std::vector<std::size_t> pattern_rows(std::size_t n, std::size_t t);

enum class ItemKind { Entry, BareY };

struct PatternItem {
  ItemKind kind;
  std::size_t row;
  std::size_t col;

  friend bool operator==(const PatternItem&, const PatternItem&) = default;
};

struct PatternColumn {
  std::size_t t;
  std::size_t k;
  std::vector<std::size_t> rows;
};

struct PatternSpec {
  std::size_t n = 0;
  std::vector<PatternColumn> columns;
  /// Selected entries, column by column, rows ascending.
  std::vector<std::pair<std::size_t, std::size_t>> selected;
  /// Selected entries with the bare variables y[s,t], ..., y[s+t-2,t] placed right before f_st.
  std::vector<PatternItem> augmented;

  bool is_selected(std::size_t i, std::size_t j) const;
};

PatternSpec pattern_spec(std::size_t n);

std::string label(const PatternItem& item);

/// The selected entries f_st as polynomials, in pattern order.
std::vector<LabeledPolynomial> build_F(const GenericProduct& product);
/// The augmented sequence: selected entries interleaved with their bare y variables.
std::vector<LabeledPolynomial> build_Ftilde(const GenericProduct& product);

/// Predicted effective lead of a selected f_st under the diagonal-band order:
/// x[s,s] y[s,1] for t = 1, x[s,s+t-1] y[s+t-1,t] otherwise. DomainError if (s,t) is unselected.
Monomial expected_effective_lead(const VariableTable& table, std::size_t s, std::size_t t);

/// Certifies the augmented sequence step by step under the diagonal-band order and checks
/// each entry's effective lead against expected_effective_lead.
RegularityCertificate certify_theorem(std::size_t n, Field field = Field::prime_field());

/// Rows of the selection pattern, "f11 ... ×", one line per matrix row.
std::string render_pattern_matrix(const PatternSpec& spec);

struct RelationCheck {
  std::string relation;
  Polynomial residue;               // lhs - rhs
  std::string cofactor;             // the multiplier c of f22
  bool cofactor_outside_prefix;     // c is not in <f11, f12, f21>
  bool multiple_inside_prefix;      // c * f22 is in <f11, f12, f21>

  bool holds() const { return residue.is_zero() && cofactor_outside_prefix && multiple_inside_prefix; }
};

/// Zerodivisor evidence for f22 modulo <f11, f12, f21> at n = 2.
struct CounterexampleReport {
  Field field;
  /// x12 y21 f11 + x11 y12 f12 - x22 y21 f21 - x21 y12 f22, the commonly quoted relation.
  RelationCheck quoted;
  /// x22 y11 f12 + x12 y12 f21 - x22 y12 f11 - x12 y11 f22, from adj(X) XY = det(X) Y.
  RelationCheck adjugate;

  /// The quoted relation and both of its membership checks hold.
  bool quoted_checks_pass() const { return quoted.holds(); }
  /// Some verified relation exhibits f22 as a zerodivisor modulo the prefix.
  bool zerodivisor_established() const { return quoted.holds() || adjugate.holds(); }
};

CounterexampleReport counterexample_n2(Field field = Field::rationals());

}  // namespace xyreg
