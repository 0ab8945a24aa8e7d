#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "xyreg/field.hpp"
#include "xyreg/monomial.hpp"
#include "xyreg/order.hpp"

namespace xyreg {

struct Term {
  Scalar coeff;
  Monomial mono;
};

/// Sparse polynomial kept canonical: terms strictly descending under the tagged order,
/// no repeated monomials, no zero coefficients. Zero is the empty term list.
class Polynomial {
public:
  Polynomial(Field field, OrderPtr order);

  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(Field field, OrderPtr order, std::vector<Term> terms);
  static Polynomial constant(Field field, OrderPtr order, const Scalar& c);
  static Polynomial monomial(Field field, OrderPtr order, Monomial m);
  static Polynomial monomial(Field field, OrderPtr order, Monomial m, const Scalar& c);

  const Field& field() const noexcept { return field_; }
  const OrderPtr& order() const noexcept { return order_; }
  std::size_t nvars() const noexcept { return order_->nvars(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  /// UndefinedLeadError on zero.
  const Term& lead() const;
  const Monomial& lead_monomial() const { return lead().mono; }

  /// Largest total degree of a term; 0 for zero.
  std::uint64_t total_degree() const;
  /// True for zero and for polynomials whose terms all share one degree.
  bool is_homogeneous() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  /// Everything but the leading term.
  Polynomial tail() const;
  Polynomial with_order(OrderPtr order) const;
  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Scalar& c, const Monomial& m) const;
  /// *this + c * m * q in one merge pass.
  Polynomial add_multiple(const Scalar& c, const Monomial& m, const Polynomial& q) const;
  /// Adds `extra` slots to every monomial and retags with `order` (which must cover them).
  Polynomial extended(std::size_t extra, OrderPtr order) const;
  Polynomial truncated(std::size_t count, OrderPtr order) const;

  /// Structural check of the canonical-form invariant.
  bool is_canonical() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
  void check_compatible(const Polynomial& other) const;

  Field field_;
  OrderPtr order_;
  std::vector<Term> terms_;
};

Term leading_term(const Polynomial& p);

inline Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial subtract(const Polynomial& p, const Polynomial& q) { return p - q; }
inline Polynomial negate(const Polynomial& p) { return -p; }
inline Polynomial scale(const Scalar& c, const Polynomial& p) { return p.scaled(c); }
inline Polynomial multiply(const Polynomial& p, const Polynomial& q) { return p * q; }

}  // namespace xyreg
