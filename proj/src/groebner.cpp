#include "xyreg/groebner.hpp"

#include <algorithm>
#include <string>

#include "xyreg/errors.hpp"

namespace xyreg {

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::size_t seq;
};

bool precedes(PairStrategy strategy, const Pair& a, const Pair& b) {
  switch (strategy) {
    case PairStrategy::Normal:
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    case PairStrategy::Fifo:
      return a.seq < b.seq;
    case PairStrategy::Reverse:
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() > b.lcm.degree();
      return a.seq > b.seq;
  }
  return false;
}

// First basis element (in list order) whose lead divides m.
const Polynomial* find_reducer(const Monomial& m, std::span<const Polynomial> basis, std::size_t* index) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].lead_monomial().divides(m)) {
      if (index != nullptr) *index = k;
      return &basis[k];
    }
  }
  return nullptr;
}

void check_same_context(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("polynomials over rings of different sizes");
  if (!(a.field() == b.field())) throw ContextMismatch("polynomials over different coefficient fields");
  if (a.order() != b.order() && !(*a.order() == *b.order())) {
    throw ContextMismatch("polynomials sorted under different orders");
  }
}

class PairQueue {
public:
  explicit PairQueue(PairStrategy strategy) : strategy_(strategy) {}

  void grow(std::size_t size) {
    for (auto& row : pending_) row.resize(size, false);
    pending_.resize(size, std::vector<bool>(size, false));
  }

  void push(std::size_t i, std::size_t j, Monomial lcm) {
    pending_[i][j] = pending_[j][i] = true;
    pairs_.push_back(Pair{i, j, std::move(lcm), next_seq_++});
  }

  bool empty() const { return pairs_.empty(); }

  Pair pop() {
    auto best = pairs_.begin();
    for (auto it = pairs_.begin() + 1; it != pairs_.end(); ++it) {
      if (precedes(strategy_, *it, *best)) best = it;
    }
    Pair p = std::move(*best);
    *best = std::move(pairs_.back());
    pairs_.pop_back();
    pending_[p.i][p.j] = pending_[p.j][p.i] = false;
    return p;
  }

  bool pending(std::size_t i, std::size_t j) const { return pending_[i][j]; }

private:
  PairStrategy strategy_;
  std::vector<Pair> pairs_;
  std::vector<std::vector<bool>> pending_;
  std::size_t next_seq_ = 0;
};

}  // namespace

DivisionResult multi_divide(const Polynomial& f, std::span<const Polynomial> divisors) {
  for (const Polynomial& d : divisors) {
    check_same_context(f, d);
    if (d.is_zero()) throw UndefinedLeadError("division by the zero polynomial");
  }
  DivisionResult result{std::vector<Polynomial>(divisors.size(), Polynomial(f.field(), f.order())),
                        Polynomial(f.field(), f.order())};
  std::vector<Term> remainder;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term& lt = p.lead();
    std::size_t k = 0;
    if (const Polynomial* d = find_reducer(lt.mono, divisors, &k)) {
      const Scalar c = lt.coeff / d->lead().coeff;
      const Monomial m = lt.mono / d->lead_monomial();
      result.quotients[k] = result.quotients[k] + Polynomial::monomial(f.field(), f.order(), m, c);
      p = p.add_multiple(-c, m, *d);
    } else {
      remainder.push_back(lt);
      p = p.tail();
    }
  }
  result.remainder = Polynomial::from_terms(f.field(), f.order(), std::move(remainder));
  return result;
}

Polynomial s_poly(const Polynomial& f, const Polynomial& g) {
  check_same_context(f, g);
  const Term& lf = f.lead();
  const Term& lg = g.lead();
  const Monomial l = mono_lcm(lf.mono, lg.mono);
  const Polynomial left = f.times_term(lf.coeff.inverse(), l / lf.mono);
  return left.add_multiple(-lg.coeff.inverse(), l / lg.mono, g);
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  for (const Polynomial& g : basis) check_same_context(f, g);
  std::vector<Term> remainder;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term& lt = p.lead();
    if (const Polynomial* g = find_reducer(lt.mono, basis, nullptr)) {
      p = p.add_multiple(-(lt.coeff / g->lead().coeff), lt.mono / g->lead_monomial(), *g);
    } else {
      remainder.push_back(lt);
      p = p.tail();
    }
  }
  return Polynomial::from_terms(f.field(), f.order(), std::move(remainder));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f.with_order(gb.order()), std::span<const Polynomial>(gb.generators()));
}

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& f) { return normal_form(f, gb).is_zero(); }

GroebnerBasis::GroebnerBasis(Field field, OrderPtr order, std::vector<Polynomial> generators, bool reduced,
                             BuchbergerStats stats)
    : field_(field), order_(std::move(order)), generators_(std::move(generators)), reduced_(reduced), stats_(stats) {
  for (const Polynomial& g : generators_) {
    if (g.is_zero()) throw DomainError("Groebner basis elements must be non-zero");
    if (!(g.field() == field_)) throw ContextMismatch("basis element over another field");
    if (g.order() != order_ && !(*g.order() == *order_)) throw ContextMismatch("basis element under another order");
  }
}

bool GroebnerBasis::is_unit_ideal() const {
  return std::any_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.is_constant(); });
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const BuchbergerOptions& options) {
  std::vector<Polynomial> basis;
  for (const Polynomial& g : gens) {
    if (!basis.empty()) check_same_context(basis.front(), g);
    if (g.is_zero()) continue;
    Polynomial m = g.monic();
    if (std::find(basis.begin(), basis.end(), m) == basis.end()) basis.push_back(std::move(m));
  }
  if (basis.empty()) throw DomainError("buchberger needs at least one non-zero generator");
  const Field field = basis.front().field();
  const OrderPtr order = basis.front().order();

  BuchbergerStats stats;
  PairQueue queue(options.strategy);
  queue.grow(basis.size());
  for (std::size_t j = 1; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      queue.push(i, j, mono_lcm(basis[i].lead_monomial(), basis[j].lead_monomial()));
      ++stats.pairs_created;
    }
  }

  while (!queue.empty()) {
    const Pair pair = queue.pop();
    const Monomial& li = basis[pair.i].lead_monomial();
    const Monomial& lj = basis[pair.j].lead_monomial();
    if (coprime(li, lj)) {
      ++stats.coprime_skipped;
      continue;
    }
    bool chain = false;
    for (std::size_t l = 0; l < basis.size() && !chain; ++l) {
      if (l == pair.i || l == pair.j) continue;
      chain = basis[l].lead_monomial().divides(pair.lcm) && !queue.pending(pair.i, l) && !queue.pending(pair.j, l);
    }
    if (chain) {
      ++stats.chain_skipped;
      continue;
    }
    if (options.budget.max_degree && pair.lcm.degree() > *options.budget.max_degree) {
      throw BudgetExceeded("S-pair of degree " + std::to_string(pair.lcm.degree()) + " exceeds the degree budget " +
                           std::to_string(*options.budget.max_degree));
    }
    if (options.budget.max_pairs && stats.pairs_reduced >= *options.budget.max_pairs) {
      throw BudgetExceeded("pair budget of " + std::to_string(*options.budget.max_pairs) + " reductions exhausted");
    }
    ++stats.pairs_reduced;
    Polynomial h = normal_form(s_poly(basis[pair.i], basis[pair.j]), std::span<const Polynomial>(basis));
    if (h.is_zero()) {
      ++stats.zero_reductions;
      continue;
    }
    basis.push_back(h.monic());
    const std::size_t k = basis.size() - 1;
    queue.grow(basis.size());
    for (std::size_t i = 0; i < k; ++i) {
      queue.push(i, k, mono_lcm(basis[i].lead_monomial(), basis[k].lead_monomial()));
      ++stats.pairs_created;
    }
  }
  GroebnerBasis raw(field, order, std::move(basis), false, stats);
  return reduce_basis(raw);
}

GroebnerBasis reduce_basis(const GroebnerBasis& gb) {
  const auto& gens = gb.generators();
  std::vector<Polynomial> minimal;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const Monomial& lk = gens[k].lead_monomial();
    bool redundant = false;
    for (std::size_t l = 0; l < gens.size() && !redundant; ++l) {
      if (l == k) continue;
      const Monomial& ll = gens[l].lead_monomial();
      // Equal leads: keep the earliest copy.
      redundant = ll.divides(lk) && (!(ll == lk) || l < k);
    }
    if (!redundant) minimal.push_back(gens[k].monic());
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (const Polynomial& g : minimal) {
    const Polynomial lead = Polynomial::monomial(g.field(), g.order(), g.lead_monomial());
    reduced.push_back(lead + normal_form(g.tail(), std::span<const Polynomial>(minimal)));
  }
  const OrderPtr& order = gb.order();
  std::sort(reduced.begin(), reduced.end(), [&order](const Polynomial& a, const Polynomial& b) {
    return order->greater(a.lead_monomial(), b.lead_monomial());
  });
  return GroebnerBasis(gb.field(), gb.order(), std::move(reduced), true, gb.stats());
}

std::vector<Monomial> minimalize(std::vector<Monomial> monomials) {
  std::vector<Monomial> out;
  for (std::size_t k = 0; k < monomials.size(); ++k) {
    bool redundant = false;
    for (std::size_t l = 0; l < monomials.size() && !redundant; ++l) {
      if (l == k) continue;
      redundant = monomials[l].divides(monomials[k]) && (!(monomials[l] == monomials[k]) || l < k);
    }
    if (!redundant) out.push_back(monomials[k]);
  }
  return out;
}

std::vector<Monomial> lead_ideal(const GroebnerBasis& gb) {
  std::vector<Monomial> leads;
  leads.reserve(gb.size());
  for (const Polynomial& g : gb.generators()) leads.push_back(g.lead_monomial());
  return minimalize(std::move(leads));
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  const auto& gens = gb.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!normal_form(s_poly(gens[i], gens[j]), std::span<const Polynomial>(gens)).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace xyreg
