#include "xyreg/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "xyreg/errors.hpp"

namespace xyreg {

namespace {

void check_sizes(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) {
    throw DimensionError("monomials over " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()) + " variables");
  }
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exps)
    : exps_(std::move(exps)), degree_(std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0})) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t slot, Exponent power) {
  if (slot >= nvars) throw DimensionError("variable slot " + std::to_string(slot) + " out of range");
  Monomial m(nvars);
  m.exps_[slot] = power;
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  check_sizes(*this, other);
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  check_sizes(a, b);
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  r.degree_ += b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw DomainError("monomial quotient is not exact");
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
  r.degree_ -= b.degree_;
  return r;
}

Monomial Monomial::extended(std::size_t extra) const {
  Monomial r = *this;
  r.exps_.resize(exps_.size() + extra, 0);
  return r;
}

Monomial Monomial::truncated(std::size_t count) const {
  if (count > exps_.size()) throw DimensionError("cannot drop more slots than exist");
  for (std::size_t i = exps_.size() - count; i < exps_.size(); ++i) {
    if (exps_[i] != 0) throw DomainError("dropped slot carries a non-zero exponent");
  }
  return Monomial(std::vector<Exponent>(exps_.begin(), exps_.end() - static_cast<std::ptrdiff_t>(count)));
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  check_sizes(a, b);
  std::vector<Monomial::Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  check_sizes(a, b);
  std::vector<Monomial::Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) {
  check_sizes(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto e : m.exponents()) h = (h ^ e) * 0x100000001b3ULL;
  return h;
}

}  // namespace xyreg
