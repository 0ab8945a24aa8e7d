#include "xyreg/polynomial.hpp"

#include <algorithm>

#include "xyreg/errors.hpp"

namespace xyreg {

Polynomial::Polynomial(Field field, OrderPtr order) : field_(field), order_(std::move(order)) {
  if (!order_) throw DomainError("polynomial needs a monomial order");
}

Polynomial Polynomial::from_terms(Field field, OrderPtr order, std::vector<Term> terms) {
  Polynomial p(field, std::move(order));
  const MonomialOrder& ord = *p.order_;
  for (const Term& t : terms) {
    if (t.mono.size() != ord.nvars()) throw DimensionError("term has the wrong number of variables");
    if (!(t.coeff.field() == field)) throw ContextMismatch("term coefficient from another field");
  }
  std::sort(terms.begin(), terms.end(),
            [&ord](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::constant(Field field, OrderPtr order, const Scalar& c) {
  const std::size_t nvars = order->nvars();
  return monomial(field, std::move(order), Monomial(nvars), c);
}

Polynomial Polynomial::monomial(Field field, OrderPtr order, Monomial m) {
  return monomial(field, std::move(order), std::move(m), field.one());
}

Polynomial Polynomial::monomial(Field field, OrderPtr order, Monomial m, const Scalar& c) {
  std::vector<Term> terms;
  terms.push_back(Term{c, std::move(m)});
  return from_terms(field, std::move(order), std::move(terms));
}

const Term& Polynomial::lead() const {
  if (terms_.empty()) throw UndefinedLeadError("leading term of the zero polynomial");
  return terms_.front();
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [this](const Term& t) { return t.mono.degree() == terms_.front().mono.degree(); });
}

Polynomial Polynomial::tail() const {
  Polynomial r(field_, order_);
  if (!terms_.empty()) r.terms_.assign(terms_.begin() + 1, terms_.end());
  return r;
}

Polynomial Polynomial::with_order(OrderPtr order) const {
  if (order->nvars() != nvars()) throw DimensionError("re-sort into an order over a different ring");
  return from_terms(field_, std::move(order), terms_);
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff.is_one()) return *this;
  return scaled(terms_.front().coeff.inverse());
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial r(field_, order_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back(Term{t.coeff * c, t.mono});
  return r;
}

Polynomial Polynomial::times_term(const Scalar& c, const Monomial& m) const {
  Polynomial r(field_, order_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  // Multiplicativity of the order keeps the product sorted.
  for (const Term& t : terms_) r.terms_.push_back(Term{t.coeff * c, t.mono * m});
  return r;
}

Polynomial Polynomial::add_multiple(const Scalar& c, const Monomial& m, const Polynomial& q) const {
  check_compatible(q);
  if (c.is_zero() || q.is_zero()) return *this;
  const MonomialOrder& ord = *order_;
  Polynomial r(field_, order_);
  r.terms_.reserve(terms_.size() + q.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  std::optional<Term> shifted;
  while (i < terms_.size() || j < q.terms_.size()) {
    if (j < q.terms_.size() && !shifted) shifted = Term{q.terms_[j].coeff * c, q.terms_[j].mono * m};
    if (j >= q.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
      continue;
    }
    if (i >= terms_.size()) {
      r.terms_.push_back(std::move(*shifted));
      shifted.reset();
      ++j;
      continue;
    }
    const auto cmp = ord.compare(terms_[i].mono, shifted->mono);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back(std::move(*shifted));
      shifted.reset();
      ++j;
    } else {
      Scalar sum = terms_[i].coeff + shifted->coeff;
      if (!sum.is_zero()) r.terms_.push_back(Term{std::move(sum), terms_[i].mono});
      ++i;
      ++j;
      shifted.reset();
    }
  }
  return r;
}

Polynomial Polynomial::extended(std::size_t extra, OrderPtr order) const {
  if (order->nvars() != nvars() + extra) throw DimensionError("extension order has the wrong size");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) terms.push_back(Term{t.coeff, t.mono.extended(extra)});
  return from_terms(field_, std::move(order), std::move(terms));
}

Polynomial Polynomial::truncated(std::size_t count, OrderPtr order) const {
  if (order->nvars() + count != nvars()) throw DimensionError("truncation order has the wrong size");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) terms.push_back(Term{t.coeff, t.mono.truncated(count)});
  return from_terms(field_, std::move(order), std::move(terms));
}

bool Polynomial::is_canonical() const {
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (terms_[k].coeff.is_zero()) return false;
    if (k > 0 && !order_->greater(terms_[k - 1].mono, terms_[k].mono)) return false;
  }
  return true;
}

Polynomial Polynomial::operator-() const { return scaled(-field_.one()); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  return a.add_multiple(a.field_.one(), Monomial(a.nvars()), b);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a.add_multiple(-a.field_.one(), Monomial(a.nvars()), b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  Polynomial r(a.field_, a.order_);
  for (const Term& t : small.terms_) r = r.add_multiple(t.coeff, t.mono, large);
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.field_ == b.field_) || a.terms_.size() != b.terms_.size() || a.nvars() != b.nvars()) return false;
  if (a.order_ != b.order_ && !(*a.order_ == *b.order_)) return a == b.with_order(a.order_);
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (!(a.terms_[k].mono == b.terms_[k].mono) || !(a.terms_[k].coeff == b.terms_[k].coeff)) return false;
  }
  return true;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (other.nvars() != nvars()) throw DimensionError("polynomials over rings of different sizes");
  if (!(field_ == other.field_)) throw ContextMismatch("polynomials over different coefficient fields");
  if (order_ != other.order_ && !(*order_ == *other.order_)) {
    throw ContextMismatch("polynomials sorted under different orders; re-sort with with_order first");
  }
}

Term leading_term(const Polynomial& p) { return p.lead(); }

}  // namespace xyreg
