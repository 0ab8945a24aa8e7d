#include "xyreg/pattern.hpp"

#include <algorithm>
#include <sstream>

#include "xyreg/errors.hpp"
#include "xyreg/groebner.hpp"
#include "xyreg/text.hpp"

namespace xyreg {

VariableTable build_ring(std::size_t n) { return VariableTable(n); }

OrderPtr diagonal_band_order(std::size_t n) {
  const VariableTable table(n);
  std::vector<std::size_t> precedence;
  precedence.reserve(table.nvars());
  for (std::size_t d = 0; d < n; ++d) {
    for (std::size_t i = 1; i + d <= n; ++i) precedence.push_back(table.x(i, i + d));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j < i; ++j) precedence.push_back(table.x(i, j));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) precedence.push_back(table.y(i, j));
  }
  return make_order(MonomialOrder(OrderKind::DiagonalBand, std::move(precedence)));
}

GenericProduct::GenericProduct(std::size_t n, Field field, OrderPtr order)
    : table_(n), field_(field), order_(std::move(order)) {
  if (order_->nvars() != table_.nvars()) throw DimensionError("order does not cover 2n^2 variables");
}

GenericProduct::GenericProduct(std::size_t n) : GenericProduct(n, Field::prime_field(), diagonal_band_order(n)) {}

Polynomial GenericProduct::x(std::size_t i, std::size_t j) const {
  return Polynomial::monomial(field_, order_, table_.variable(MatrixVar::X, i, j));
}

Polynomial GenericProduct::y(std::size_t i, std::size_t j) const {
  return Polynomial::monomial(field_, order_, table_.variable(MatrixVar::Y, i, j));
}

Polynomial GenericProduct::f(std::size_t i, std::size_t j) const {
  std::vector<Term> terms;
  terms.reserve(n());
  for (std::size_t k = 1; k <= n(); ++k) {
    terms.push_back(Term{field_.one(), table_.variable(MatrixVar::X, i, k) * table_.variable(MatrixVar::Y, k, j)});
  }
  return Polynomial::from_terms(field_, order_, std::move(terms));
}

Polynomial entry_f(std::size_t n, std::size_t i, std::size_t j) { return GenericProduct(n).f(i, j); }

std::size_t k_value(std::size_t n, std::size_t t) {
  if (t < 1 || t > n) throw DomainError("column " + std::to_string(t) + " outside 1.." + std::to_string(n));
  return 1 + (n / t - 1) * t;
}

std::vector<std::size_t> pattern_rows(std::size_t n, std::size_t t) {
  const std::size_t k = k_value(n, t);
  std::vector<std::size_t> rows;
  for (std::size_t s = 1; s <= k; s += t) rows.push_back(s);
  return rows;
}

bool PatternSpec::is_selected(std::size_t i, std::size_t j) const {
  return std::find(selected.begin(), selected.end(), std::make_pair(i, j)) != selected.end();
}

PatternSpec pattern_spec(std::size_t n) {
  const VariableTable table(n);  // validates n
  PatternSpec spec;
  spec.n = table.n();
  for (std::size_t t = 1; t <= n; ++t) {
    PatternColumn column{t, k_value(n, t), pattern_rows(n, t)};
    for (std::size_t s : column.rows) {
      spec.selected.emplace_back(s, t);
      for (std::size_t r = s; r + 1 < s + t; ++r) spec.augmented.push_back(PatternItem{ItemKind::BareY, r, t});
      spec.augmented.push_back(PatternItem{ItemKind::Entry, s, t});
    }
    spec.columns.push_back(std::move(column));
  }
  return spec;
}

std::string label(const PatternItem& item) {
  return std::string(item.kind == ItemKind::Entry ? "f" : "y") + "[" + std::to_string(item.row) + "," +
         std::to_string(item.col) + "]";
}

std::vector<LabeledPolynomial> build_F(const GenericProduct& product) {
  std::vector<LabeledPolynomial> out;
  for (const auto& [s, t] : pattern_spec(product.n()).selected) {
    out.push_back(LabeledPolynomial{label(PatternItem{ItemKind::Entry, s, t}), product.f(s, t)});
  }
  return out;
}

std::vector<LabeledPolynomial> build_Ftilde(const GenericProduct& product) {
  std::vector<LabeledPolynomial> out;
  for (const PatternItem& item : pattern_spec(product.n()).augmented) {
    out.push_back(LabeledPolynomial{label(item), item.kind == ItemKind::Entry ? product.f(item.row, item.col)
                                                                              : product.y(item.row, item.col)});
  }
  return out;
}

Monomial expected_effective_lead(const VariableTable& table, std::size_t s, std::size_t t) {
  const std::size_t n = table.n();
  const auto rows = pattern_rows(n, t);
  if (std::find(rows.begin(), rows.end(), s) == rows.end()) {
    throw DomainError("(" + std::to_string(s) + "," + std::to_string(t) + ") is not a selected position");
  }
  if (t == 1) return table.variable(MatrixVar::X, s, s) * table.variable(MatrixVar::Y, s, 1);
  const std::size_t k = s + t - 1;
  return table.variable(MatrixVar::X, s, k) * table.variable(MatrixVar::Y, k, t);
}

RegularityCertificate certify_theorem(std::size_t n, Field field) {
  const GenericProduct product(n, field, diagonal_band_order(n));
  const PatternSpec spec = pattern_spec(n);
  const std::vector<LabeledPolynomial> seq = build_Ftilde(product);
  RegularityCertificate cert = certify_sequence(seq);
  cert.n = n;
  for (std::size_t k = 0; k < cert.steps.size(); ++k) {
    const PatternItem& item = spec.augmented[k];
    if (item.kind != ItemKind::Entry) continue;
    if (!(cert.steps[k].effective_lead == expected_effective_lead(product.table(), item.row, item.col))) {
      cert.verdict = Verdict{false, k, FailureReason::LeadMismatch,
                             label(item) + ": effective lead " +
                                 format_monomial(cert.steps[k].effective_lead, product.table()) +
                                 " differs from the predicted lead"};
      cert.steps.erase(cert.steps.begin() + static_cast<std::ptrdiff_t>(k), cert.steps.end());
      break;
    }
  }
  cert.notes.push_back(
      "The augmented sequence consists of homogeneous elements, so it stays regular under any permutation; "
      "listing the selected entries first shows they form a regular sequence on their own.");
  return cert;
}

std::string render_pattern_matrix(const PatternSpec& spec) {
  const std::size_t n = spec.n;
  const auto cell = [&spec, n](std::size_t i, std::size_t j) -> std::string {
    if (!spec.is_selected(i, j)) return "×";
    if (n <= 9) return "f" + std::to_string(i) + std::to_string(j);
    return "f" + std::to_string(i) + "," + std::to_string(j);
  };
  std::size_t width = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (spec.is_selected(i, j)) width = std::max(width, cell(i, j).size());
    }
  }
  std::ostringstream out;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const std::string c = cell(i, j);
      // "×" is two bytes but one column wide.
      const std::size_t shown = spec.is_selected(i, j) ? c.size() : 1;
      out << c;
      if (j < n) out << std::string(width - shown + 1, ' ');
    }
    out << '\n';
  }
  return out.str();
}

namespace {

RelationCheck check_relation(const GenericProduct& p, const GroebnerBasis& prefix, std::string relation,
                             const Polynomial& lhs, const Polynomial& cofactor) {
  const Polynomial multiple = cofactor * p.f(2, 2);
  RelationCheck check{std::move(relation), lhs - multiple, format_poly(cofactor, p.table()),
                      !ideal_contains(prefix, cofactor), ideal_contains(prefix, multiple)};
  return check;
}

}  // namespace

CounterexampleReport counterexample_n2(Field field) {
  const GenericProduct p(2, field, diagonal_band_order(2));
  const std::vector<Polynomial> prefix_gens{p.f(1, 1), p.f(1, 2), p.f(2, 1)};
  const GroebnerBasis prefix = buchberger(prefix_gens);

  const Polynomial quoted_lhs =
      p.x(1, 2) * p.y(2, 1) * p.f(1, 1) + p.x(1, 1) * p.y(1, 2) * p.f(1, 2) - p.x(2, 2) * p.y(2, 1) * p.f(2, 1);
  const Polynomial adjugate_lhs =
      p.x(2, 2) * p.y(1, 1) * p.f(1, 2) + p.x(1, 2) * p.y(1, 2) * p.f(2, 1) - p.x(2, 2) * p.y(1, 2) * p.f(1, 1);

  return CounterexampleReport{
      field,
      check_relation(p, prefix, "x12*y21*f11 + x11*y12*f12 - x22*y21*f21 = x21*y12*f22", quoted_lhs,
                     p.x(2, 1) * p.y(1, 2)),
      check_relation(p, prefix, "x22*y11*f12 + x12*y12*f21 - x22*y12*f11 = x12*y11*f22", adjugate_lhs,
                     p.x(1, 2) * p.y(1, 1)),
  };
}

}  // namespace xyreg
