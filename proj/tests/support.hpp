#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "xyreg/monomial.hpp"
#include "xyreg/order.hpp"
#include "xyreg/polynomial.hpp"

namespace xyreg::testing {

inline Monomial random_monomial(std::mt19937& rng, std::size_t nvars, unsigned max_degree) {
  std::uniform_int_distribution<std::size_t> slot(0, nvars - 1);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::vector<Monomial::Exponent> e(nvars, 0);
  const unsigned d = deg(rng);
  for (unsigned k = 0; k < d; ++k) ++e[slot(rng)];
  return Monomial(std::move(e));
}

/// Random monomial of exactly `degree`, drawn from the slots in `support`.
inline Monomial random_monomial_on(std::mt19937& rng, std::size_t nvars, const std::vector<std::size_t>& support,
                                   unsigned degree) {
  std::uniform_int_distribution<std::size_t> pick(0, support.size() - 1);
  std::vector<Monomial::Exponent> e(nvars, 0);
  for (unsigned k = 0; k < degree; ++k) ++e[support[pick(rng)]];
  return Monomial(std::move(e));
}

inline Polynomial random_poly(std::mt19937& rng, const Field& field, const OrderPtr& order, std::size_t terms,
                              unsigned max_degree) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<Term> ts;
  for (std::size_t k = 0; k < terms; ++k) {
    ts.push_back(Term{field.from_int(coeff(rng)), random_monomial(rng, order->nvars(), max_degree)});
  }
  return Polynomial::from_terms(field, order, std::move(ts));
}

inline Polynomial random_homogeneous(std::mt19937& rng, const Field& field, const OrderPtr& order, std::size_t terms,
                                     unsigned degree) {
  std::vector<std::size_t> all(order->nvars());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  std::uniform_int_distribution<int> coeff(1, 7);
  std::vector<Term> ts;
  for (std::size_t k = 0; k < terms; ++k) {
    ts.push_back(Term{field.from_int(coeff(rng)), random_monomial_on(rng, order->nvars(), all, degree)});
  }
  return Polynomial::from_terms(field, order, std::move(ts));
}

inline std::vector<OrderPtr> shipped_orders(std::size_t nvars) {
  std::vector<std::size_t> reversed(nvars);
  for (std::size_t k = 0; k < nvars; ++k) reversed[k] = nvars - 1 - k;
  return {make_order(MonomialOrder::lex(nvars)), make_order(MonomialOrder::grevlex(nvars)),
          make_order(MonomialOrder(OrderKind::DiagonalBand, reversed)),
          make_order(MonomialOrder(OrderKind::Elimination, reversed))};
}

/// One to four homogeneous elements in at most six variables whose leading monomials are
/// pairwise coprime under `order`, built by rejection sampling.
inline std::vector<Polynomial> random_coprime_lead_sequence(std::mt19937& rng, const Field& field,
                                                            const OrderPtr& order) {
  // Pairwise coprime leads need distinct variables, so the length is capped by nvars.
  std::uniform_int_distribution<int> length(1, static_cast<int>(std::min<std::size_t>(4, order->nvars())));
  std::uniform_int_distribution<std::size_t> terms(1, 4);
  std::uniform_int_distribution<unsigned> degree(1, 3);
  const int target = length(rng);
  std::vector<Polynomial> seq;
  // Earlier leads can exhaust the variables, so give up after a bounded number of draws.
  for (int attempt = 0; attempt < 500 && static_cast<int>(seq.size()) < target; ++attempt) {
    Polynomial p = random_homogeneous(rng, field, order, terms(rng), degree(rng));
    if (p.is_zero()) continue;
    bool ok = true;
    for (const Polynomial& q : seq) ok = ok && coprime(q.lead_monomial(), p.lead_monomial());
    if (ok) seq.push_back(std::move(p));
  }
  return seq;
}

/// Number of monomials of each degree 0..max_degree not divisible by any generator.
inline std::vector<std::int64_t> count_standard_monomials(const std::vector<Monomial>& gens, std::size_t nvars,
                                                          std::size_t max_degree) {
  std::vector<std::int64_t> counts(max_degree + 1, 0);
  std::vector<Monomial::Exponent> e(nvars, 0);
  // Enumerate all exponent vectors with total degree <= max_degree.
  const auto visit = [&](auto&& self, std::size_t slot, std::size_t remaining) -> void {
    if (slot == nvars) {
      const Monomial m(e);
      if (std::none_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); })) {
        ++counts[m.degree()];
      }
      return;
    }
    for (std::size_t k = 0; k <= remaining; ++k) {
      e[slot] = static_cast<Monomial::Exponent>(k);
      self(self, slot + 1, remaining - k);
    }
    e[slot] = 0;
  };
  visit(visit, 0, max_degree);
  return counts;
}

}  // namespace xyreg::testing
