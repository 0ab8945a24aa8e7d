#include "xyreg/hilbert.hpp"

#include <algorithm>

#include "xyreg/errors.hpp"

namespace xyreg {

IntPoly intpoly_trim(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

IntPoly intpoly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return intpoly_trim(std::move(r));
}

IntPoly intpoly_sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return intpoly_trim(std::move(r));
}

std::string intpoly_to_string(const IntPoly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    const std::int64_t mag = p[k] < 0 ? -p[k] : p[k];
    if (out.empty()) {
      if (p[k] < 0) out += "-";
    } else {
      out += p[k] < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += k == 1 ? "t" : "t^" + std::to_string(k);
  }
  return out;
}

std::vector<std::int64_t> HilbertData::series(std::size_t max_degree) const {
  std::vector<std::int64_t> s(max_degree + 1, 0);
  for (std::size_t k = 0; k < numerator.size() && k <= max_degree; ++k) s[k] = numerator[k];
  // Dividing by (1 - t) is a prefix sum.
  for (std::size_t pass = 0; pass < nvars; ++pass) {
    for (std::size_t k = 1; k <= max_degree; ++k) s[k] += s[k - 1];
  }
  return s;
}

namespace {

IntPoly one_minus_t_pow(std::uint64_t d) {
  IntPoly p(d + 1, 0);
  p[0] += 1;
  p[d] -= 1;
  return intpoly_trim(std::move(p));
}

IntPoly numerator_rec(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  IntPoly factor{1};
  // Generators coprime to all others are regular modulo the rest: split them off.
  std::vector<Monomial> linked;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    bool isolated = true;
    for (std::size_t l = 0; l < gens.size() && isolated; ++l) {
      if (l != k && !coprime(gens[k], gens[l])) isolated = false;
    }
    if (isolated) {
      factor = intpoly_mul(factor, one_minus_t_pow(gens[k].degree()));
    } else {
      linked.push_back(gens[k]);
    }
  }
  if (linked.empty()) return factor;

  const Monomial pivot = linked.front();
  std::vector<Monomial> rest(linked.begin() + 1, linked.end());
  std::vector<Monomial> colon;
  colon.reserve(rest.size());
  for (const Monomial& m : rest) colon.push_back(m / mono_gcd(m, pivot));

  IntPoly shifted(pivot.degree(), 0);
  const IntPoly colon_num = numerator_rec(std::move(colon));
  shifted.insert(shifted.end(), colon_num.begin(), colon_num.end());
  return intpoly_mul(factor, intpoly_sub(numerator_rec(std::move(rest)), shifted));
}

}  // namespace

HilbertData hilbert_numerator(std::span<const Monomial> gens, std::size_t nvars) {
  for (const Monomial& m : gens) {
    if (m.size() != nvars) throw DimensionError("generator size differs from the ring size");
  }
  return HilbertData{numerator_rec(std::vector<Monomial>(gens.begin(), gens.end())), nvars};
}

IntPoly complete_intersection_numerator(std::span<const std::uint64_t> degrees) {
  IntPoly p{1};
  for (std::uint64_t d : degrees) p = intpoly_mul(p, one_minus_t_pow(d));
  return p;
}

HilbertData hilbert_series_quotient(std::span<const Polynomial> gens, const OrderPtr& order,
                                    const BuchbergerOptions& options) {
  std::vector<Polynomial> sorted;
  for (const Polynomial& g : gens) {
    if (!g.is_homogeneous()) throw NonHomogeneousError("Hilbert series needs homogeneous generators");
    if (!g.is_zero()) sorted.push_back(g.with_order(order));
  }
  if (sorted.empty()) return HilbertData{{1}, order->nvars()};
  const GroebnerBasis gb = buchberger(sorted, options);
  const std::vector<Monomial> leads = lead_ideal(gb);
  return hilbert_numerator(leads, order->nvars());
}

}  // namespace xyreg
