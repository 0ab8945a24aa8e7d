#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace xyreg {

/// Dense exponent vector over a fixed number of variable slots, with cached total degree.
class Monomial {
public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  /// The monomial 1 over `nvars` slots.
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t nvars, std::size_t slot, Exponent power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  Exponent operator[](std::size_t slot) const { return exps_[slot]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient a / b; DomainError if b does not divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }

  /// Appends `extra` zero slots (used to embed into a larger ring).
  Monomial extended(std::size_t extra) const;
  /// Drops the trailing `count` slots; they must be zero.
  Monomial truncated(std::size_t count) const;

private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

Monomial mono_gcd(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace xyreg
