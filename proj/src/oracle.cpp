#include "xyreg/oracle.hpp"

#include <stdexcept>

#include "xyreg/errors.hpp"

namespace xyreg {

std::string to_string(Regularity r) {
  switch (r) {
    case Regularity::Regular:
      return "regular";
    case Regularity::NotRegular:
      return "not-regular";
    case Regularity::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

std::string to_string(OracleMethod m) { return m == OracleMethod::Hilbert ? "hilbert" : "colon"; }

OrderPtr oracle_order(std::size_t nvars) { return make_order(MonomialOrder::grevlex(nvars)); }

namespace {

std::vector<Polynomial> in_order(std::span<const Polynomial> seq, const OrderPtr& order) {
  std::vector<Polynomial> out;
  out.reserve(seq.size());
  for (const Polynomial& p : seq) out.push_back(p.with_order(order));
  return out;
}

}  // namespace

Regularity regular_oracle_hilbert(std::span<const Polynomial> seq, const BuchbergerOptions& options) {
  if (seq.empty()) return Regularity::Regular;
  std::vector<std::uint64_t> degrees;
  for (const Polynomial& p : seq) {
    if (!p.is_homogeneous()) throw NonHomogeneousError("Hilbert oracle needs homogeneous elements");
    // Zero is a zerodivisor and a constant generates the unit ideal.
    if (p.is_constant()) return Regularity::NotRegular;
    degrees.push_back(p.total_degree());
  }
  const OrderPtr order = oracle_order(seq.front().nvars());
  const HilbertData h = hilbert_series_quotient(seq, order, options);
  return h.numerator == complete_intersection_numerator(degrees) ? Regularity::Regular : Regularity::NotRegular;
}

std::vector<Polynomial> colon_ideal(const GroebnerBasis& prefix, const Polynomial& f, const BuchbergerOptions& options) {
  if (f.is_zero()) throw DomainError("colon by the zero polynomial");
  const OrderPtr& base = prefix.order();
  const Polynomial fb = f.with_order(base);
  if (prefix.size() == 0) return {};

  const std::size_t nv = base->nvars();
  std::vector<std::size_t> precedence{nv};
  precedence.insert(precedence.end(), base->precedence().begin(), base->precedence().end());
  const OrderPtr elim = make_order(MonomialOrder(OrderKind::Elimination, std::move(precedence)));
  const Monomial t = Monomial::variable(nv + 1, nv);
  const Scalar one = f.field().one();

  std::vector<Polynomial> gens;
  gens.reserve(prefix.size() + 1);
  for (const Polynomial& g : prefix.generators()) gens.push_back(g.extended(1, elim).times_term(one, t));
  const Polynomial fe = fb.extended(1, elim);
  gens.push_back(fe - fe.times_term(one, t));

  const GroebnerBasis gb = buchberger(gens, options);
  std::vector<Polynomial> colon;
  const std::vector<Polynomial> divisor{fb};
  for (const Polynomial& h : gb.generators()) {
    // Under the elimination order a t-free lead means a t-free element.
    if (h.lead_monomial()[nv] != 0) continue;
    const Polynomial hb = h.truncated(1, base);
    DivisionResult d = multi_divide(hb, divisor);
    if (!d.remainder.is_zero()) throw std::logic_error("intersection generator is not a multiple of f");
    colon.push_back(std::move(d.quotients.front()));
  }
  return colon;
}

bool nonzerodivisor_colon(const GroebnerBasis& prefix, const Polynomial& f, const BuchbergerOptions& options) {
  for (const Polynomial& q : colon_ideal(prefix, f, options)) {
    if (!ideal_contains(prefix, q)) return false;
  }
  return true;
}

namespace {

SequenceVerdict hilbert_method(std::span<const Polynomial> seq, const BuchbergerOptions& options) {
  SequenceVerdict out;
  std::vector<std::uint64_t> degrees;
  bool has_constant = false;
  for (const Polynomial& p : seq) {
    if (!p.is_homogeneous()) throw NonHomogeneousError("Hilbert oracle needs homogeneous elements");
    has_constant = has_constant || p.is_constant();
    degrees.push_back(p.total_degree());
  }
  if (!has_constant) {
    const OrderPtr order = oracle_order(seq.front().nvars());
    out.hilbert = hilbert_series_quotient(seq, order, options);
    out.expected_numerator = complete_intersection_numerator(degrees);
    if (out.hilbert->numerator == *out.expected_numerator) {
      out.verdict = Regularity::Regular;
      out.message = "Hilbert series matches the complete-intersection series";
      return out;
    }
  }
  out.verdict = Regularity::NotRegular;
  out.message = "Hilbert series differs from the complete-intersection series";
  // Prefixes of a regular sequence are regular, so the first failing prefix is well defined.
  for (std::size_t k = 1; k <= seq.size(); ++k) {
    const Regularity r = regular_oracle_hilbert(seq.first(k), options);
    out.steps.push_back(OracleStep{k, r, "prefix of length " + std::to_string(k)});
    if (r == Regularity::NotRegular) {
      out.first_failure = k;
      break;
    }
  }
  return out;
}

SequenceVerdict colon_method(std::span<const Polynomial> seq, const BuchbergerOptions& options) {
  SequenceVerdict out;
  const OrderPtr order = oracle_order(seq.front().nvars());
  const std::vector<Polynomial> sorted = in_order(seq, order);
  const auto fail_at = [&out](std::size_t k, std::string note) {
    out.steps.push_back(OracleStep{k, Regularity::NotRegular, note});
    out.verdict = Regularity::NotRegular;
    out.first_failure = k;
    out.message = std::move(note);
  };
  GroebnerBasis prefix(sorted.front().field(), order, {}, true);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const std::size_t k = i + 1;
    if (sorted[i].is_zero()) {
      fail_at(k, "element is zero");
      return out;
    }
    if (!nonzerodivisor_colon(prefix, sorted[i], options)) {
      fail_at(k, "element is a zerodivisor modulo its prefix");
      return out;
    }
    prefix = buchberger(std::span<const Polynomial>(sorted).first(k), options);
    if (prefix.is_unit_ideal()) {
      fail_at(k, "prefix generates the whole ring");
      return out;
    }
    out.steps.push_back(OracleStep{k, Regularity::Regular, "non-zerodivisor modulo its prefix"});
  }
  out.verdict = Regularity::Regular;
  out.message = "every element is a non-zerodivisor modulo its prefix";
  return out;
}

}  // namespace

SequenceVerdict sequence_oracle(std::span<const Polynomial> seq, OracleMethod method, const BuchbergerOptions& options) {
  if (seq.empty()) {
    SequenceVerdict out;
    out.message = "empty sequence is vacuously regular";
    return out;
  }
  try {
    return method == OracleMethod::Hilbert ? hilbert_method(seq, options) : colon_method(seq, options);
  } catch (const BudgetExceeded& e) {
    SequenceVerdict out;
    out.verdict = Regularity::Inconclusive;
    out.message = e.what();
    return out;
  }
}

ExtensionReport greedy_extend(std::span<const Polynomial> base, std::span<const Polynomial> candidates,
                              OracleMethod method, const BuchbergerOptions& options) {
  const SequenceVerdict start = sequence_oracle(base, method, options);
  if (start.verdict != Regularity::Regular) {
    throw DomainError("greedy extension needs a regular base sequence (" + to_string(start.verdict) + ")");
  }
  ExtensionReport report;
  report.sequence.assign(base.begin(), base.end());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    std::vector<Polynomial> trial = report.sequence;
    trial.push_back(candidates[c]);
    const SequenceVerdict v = sequence_oracle(trial, method, options);
    if (v.verdict == Regularity::Regular) {
      report.sequence = std::move(trial);
      report.accepted.push_back(c);
    } else {
      report.rejected.push_back(Rejection{c, v.verdict, v.message});
    }
  }
  return report;
}

}  // namespace xyreg
