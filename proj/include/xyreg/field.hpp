#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace xyreg {

enum class FieldKind { PrimeField, Rationals };

class Scalar;

/// Coefficient domain: GF(p) or the rationals.
class Field {
public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  /// Throws DomainError unless p is a prime below 2^31.
  static Field prime_field(std::uint32_t p = kDefaultPrime);
  static Field rationals();

  FieldKind kind() const noexcept { return kind_; }
  std::uint32_t prime() const noexcept { return prime_; }  // 0 for the rationals

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t value) const;
  /// num/den; DomainError if den vanishes in the field.
  Scalar from_ratio(const mpz_class& num, const mpz_class& den) const;

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

private:
  friend class Scalar;

  Field(FieldKind kind, std::uint32_t prime) : kind_(kind), prime_(prime) {}

  FieldKind kind_;
  std::uint32_t prime_;
};

bool is_prime(std::uint64_t p);

/// Element of a Field. GF(p) values are kept in [0, p), rationals in lowest terms.
class Scalar {
public:
  struct Mod {
    std::uint32_t value;
    std::uint32_t prime;
    friend bool operator==(const Mod&, const Mod&) = default;
  };

  explicit Scalar(Mod m) : value_(m) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }

  Field field() const;
  bool is_zero() const;
  bool is_one() const;
  /// True for a rational below zero or a GF(p) value above p/2, used only for printing signs.
  bool prints_negative() const;

  Scalar operator-() const;
  Scalar inverse() const;  // DomainError on zero

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Decimal text; "a/b" for non-integral rationals. GF(p) prints the residue in [0, p).
  std::string to_string() const;

  const std::variant<Mod, mpq_class>& raw() const noexcept { return value_; }

private:
  std::variant<Mod, mpq_class> value_;
};

}  // namespace xyreg
