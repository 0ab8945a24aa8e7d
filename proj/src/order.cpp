#include "xyreg/order.hpp"

#include <algorithm>
#include <numeric>

#include "xyreg/errors.hpp"

namespace xyreg {

namespace {

std::strong_ordering lex_compare(std::span<const std::size_t> precedence, const Monomial& a, const Monomial& b) {
  for (std::size_t slot : precedence) {
    if (a[slot] != b[slot]) return a[slot] <=> b[slot];
  }
  return std::strong_ordering::equal;
}

// Reverse-lex tie break: the last-ranked differing variable decides, smaller exponent wins.
std::strong_ordering revlex_tail(std::span<const std::size_t> precedence, const Monomial& a, const Monomial& b) {
  for (auto it = precedence.rbegin(); it != precedence.rend(); ++it) {
    if (a[*it] != b[*it]) return b[*it] <=> a[*it];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering grevlex_compare(std::span<const std::size_t> precedence, const Monomial& a,
                                     const Monomial& b) {
  std::uint64_t da = 0;
  std::uint64_t db = 0;
  for (std::size_t slot : precedence) {
    da += a[slot];
    db += b[slot];
  }
  if (da != db) return da <=> db;
  return revlex_tail(precedence, a, b);
}

}  // namespace

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
  std::vector<std::size_t> sorted = precedence_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw DomainError("variable precedence is not a permutation");
  }
  if (kind_ == OrderKind::Elimination && precedence_.empty()) {
    throw DomainError("elimination order needs at least one variable");
  }
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return MonomialOrder(OrderKind::Lex, std::move(p));
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return MonomialOrder(OrderKind::GradedReverseLex, std::move(p));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != nvars() || b.size() != nvars()) {
    throw DimensionError("monomial size does not match the order's " + std::to_string(nvars()) + " variables");
  }
  switch (kind_) {
    case OrderKind::Lex:
    case OrderKind::DiagonalBand:
      return lex_compare(precedence_, a, b);
    case OrderKind::GradedReverseLex:
      // Total degree is cached, so compare it before touching exponents.
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return revlex_tail(precedence_, a, b);
    case OrderKind::Elimination: {
      const std::size_t first = precedence_.front();
      if (a[first] != b[first]) return a[first] <=> b[first];
      return grevlex_compare(std::span(precedence_).subspan(1), a, b);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::GradedReverseLex:
      return "grevlex";
    case OrderKind::DiagonalBand:
      return "paper";
    case OrderKind::Elimination:
      return "elimination";
  }
  return "unknown";
}

std::strong_ordering mono_compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  return order.compare(a, b);
}

}  // namespace xyreg
