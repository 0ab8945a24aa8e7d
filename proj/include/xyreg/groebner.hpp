#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "xyreg/polynomial.hpp"

namespace xyreg {

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division: f = sum(q_i * d_i) + r, no term of r divisible by any Lt(d_i).
/// The first divisor (in list order) whose lead divides the current term is used.
DivisionResult multi_divide(const Polynomial& f, std::span<const Polynomial> divisors);

/// (L / Lt(f)) f - (L / Lt(g)) g with L the lcm of the leading monomials, leads taken monic.
Polynomial s_poly(const Polynomial& f, const Polynomial& g);

enum class PairStrategy {
  /// Smallest lcm degree first, ties by smallest (i, j).
  Normal,
  /// Creation order.
  Fifo,
  /// Largest lcm degree first; only useful for cross-checking.
  Reverse,
};

/// Limits on a Buchberger run. Exceeding either throws BudgetExceeded.
struct Budget {
  std::optional<std::size_t> max_pairs;       // S-polynomials actually reduced
  std::optional<std::uint64_t> max_degree;    // lcm degree of any reduced pair
};

struct BuchbergerOptions {
  PairStrategy strategy = PairStrategy::Normal;
  Budget budget{};
};

struct BuchbergerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t coprime_skipped = 0;
  std::size_t chain_skipped = 0;
  std::size_t zero_reductions = 0;
};

class GroebnerBasis {
public:
  GroebnerBasis(Field field, OrderPtr order, std::vector<Polynomial> generators, bool reduced,
                BuchbergerStats stats = {});

  const Field& field() const noexcept { return field_; }
  const OrderPtr& order() const noexcept { return order_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool is_reduced() const noexcept { return reduced_; }
  const BuchbergerStats& stats() const noexcept { return stats_; }

  /// True when the ideal is the whole ring.
  bool is_unit_ideal() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.generators_ == b.generators_;
  }

private:
  Field field_;
  OrderPtr order_;
  std::vector<Polynomial> generators_;
  bool reduced_;
  BuchbergerStats stats_;
};

/// Reduced Groebner basis of the ideal generated by `gens`, under the order the generators
/// are tagged with. Zero generators are ignored; DomainError if none remain.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const BuchbergerOptions& options = {});

/// The unique reduced basis (monic, minimal leads, tails irreducible), sorted by descending lead.
GroebnerBasis reduce_basis(const GroebnerBasis& gb);

/// Remainder of f modulo a Groebner basis; zero iff f is in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& f);

/// Minimal monomial generators of the leading-term ideal.
std::vector<Monomial> lead_ideal(const GroebnerBasis& gb);

/// Drops every monomial divisible by another one (keeping one copy of duplicates).
std::vector<Monomial> minimalize(std::vector<Monomial> monomials);

/// Checks every S-pair of the basis reduces to zero modulo the basis.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

}  // namespace xyreg
