#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "xyreg/monomial.hpp"

namespace xyreg {

enum class OrderKind {
  Lex,
  GradedReverseLex,
  /// Lexicographic under the diagonal-then-superdiagonal-bands precedence of K[x_ij, y_ij]
  /// (see diagonal_band_order). Serialized as "paper".
  DiagonalBand,
  /// First precedence variable compared alone by exponent, ties broken by grevlex on the rest.
  Elimination,
};

/// A monomial order: a kind plus a variable precedence (highest first).
///
/// `precedence()[r]` is the slot ranked r-th; rank 0 is the largest variable.
class MonomialOrder {
public:
  MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence);

  /// Slot order 0 > 1 > 2 > ... .
  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder grevlex(std::size_t nvars);

  OrderKind kind() const noexcept { return kind_; }
  std::size_t nvars() const noexcept { return precedence_.size(); }
  const std::vector<std::size_t>& precedence() const noexcept { return precedence_; }

  /// DimensionError if either monomial has a different slot count.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
  OrderKind kind_;
  std::vector<std::size_t> precedence_;
};

using OrderPtr = std::shared_ptr<const MonomialOrder>;

inline OrderPtr make_order(MonomialOrder order) {
  return std::make_shared<const MonomialOrder>(std::move(order));
}

std::strong_ordering mono_compare(const MonomialOrder& order, const Monomial& a, const Monomial& b);

}  // namespace xyreg
