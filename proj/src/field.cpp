#include "xyreg/field.hpp"

#include "xyreg/errors.hpp"

namespace xyreg {

namespace {

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

const Scalar::Mod& same_prime(const Scalar::Mod& a, const Scalar::Mod& b) {
  if (a.prime != b.prime) throw ContextMismatch("scalars from different prime fields");
  return a;
}

[[noreturn]] void mixed_fields() { throw ContextMismatch("mixing GF(p) and rational scalars"); }

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Field Field::prime_field(std::uint32_t p) {
  if (p >= (1U << 31U) || !is_prime(p)) {
    throw DomainError("characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
  return Field(FieldKind::PrimeField, p);
}

Field Field::rationals() { return Field(FieldKind::Rationals, 0); }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t value) const {
  if (kind_ == FieldKind::Rationals) return Scalar(mpq_class(mpz_class(std::to_string(value))));
  std::int64_t r = value % static_cast<std::int64_t>(prime_);
  if (r < 0) r += prime_;
  return Scalar(Scalar::Mod{static_cast<std::uint32_t>(r), prime_});
}

Scalar Field::from_ratio(const mpz_class& num, const mpz_class& den) const {
  if (kind_ == FieldKind::Rationals) {
    if (den == 0) throw DomainError("zero denominator");
    return Scalar(mpq_class(num, den));
  }
  const std::uint32_t d = reduce_mpz(den, prime_);
  if (d == 0) throw DomainError("denominator vanishes modulo " + std::to_string(prime_));
  const std::uint64_t n = reduce_mpz(num, prime_);
  return Scalar(Scalar::Mod{static_cast<std::uint32_t>(n * mod_pow(d, prime_ - 2, prime_) % prime_), prime_});
}

std::string Field::name() const {
  return kind_ == FieldKind::Rationals ? "rat" : "gf(" + std::to_string(prime_) + ")";
}

Field Scalar::field() const {
  if (const auto* m = std::get_if<Mod>(&value_)) return Field(FieldKind::PrimeField, m->prime);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* m = std::get_if<Mod>(&value_)) return m->value == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const {
  if (const auto* m = std::get_if<Mod>(&value_)) return m->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

bool Scalar::prints_negative() const {
  if (const auto* m = std::get_if<Mod>(&value_)) return m->value > m->prime / 2;
  return std::get<mpq_class>(value_) < 0;
}

Scalar Scalar::operator-() const {
  if (const auto* m = std::get_if<Mod>(&value_)) {
    return Scalar(Mod{m->value == 0 ? 0 : m->prime - m->value, m->prime});
  }
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (const auto* m = std::get_if<Mod>(&value_)) {
    return Scalar(Mod{mod_pow(m->value, m->prime - 2, m->prime), m->prime});
  }
  return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (const auto* x = std::get_if<Scalar::Mod>(&a.value_)) {
    const auto* y = std::get_if<Scalar::Mod>(&b.value_);
    if (y == nullptr) mixed_fields();
    same_prime(*x, *y);
    std::uint64_t s = std::uint64_t{x->value} + y->value;
    if (s >= x->prime) s -= x->prime;
    return Scalar(Scalar::Mod{static_cast<std::uint32_t>(s), x->prime});
  }
  const auto* y = std::get_if<mpq_class>(&b.value_);
  if (y == nullptr) mixed_fields();
  return Scalar(mpq_class(std::get<mpq_class>(a.value_) + *y));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (const auto* x = std::get_if<Scalar::Mod>(&a.value_)) {
    const auto* y = std::get_if<Scalar::Mod>(&b.value_);
    if (y == nullptr) mixed_fields();
    same_prime(*x, *y);
    return Scalar(Scalar::Mod{
        static_cast<std::uint32_t>(std::uint64_t{x->value} * y->value % x->prime), x->prime});
  }
  const auto* y = std::get_if<mpq_class>(&b.value_);
  if (y == nullptr) mixed_fields();
  return Scalar(mpq_class(std::get<mpq_class>(a.value_) * *y));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (const auto* x = std::get_if<Scalar::Mod>(&a.value_)) return *x == std::get<Scalar::Mod>(b.value_);
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::string Scalar::to_string() const {
  if (const auto* m = std::get_if<Mod>(&value_)) return std::to_string(m->value);
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace xyreg
