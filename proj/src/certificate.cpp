#include "xyreg/certificate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "xyreg/errors.hpp"

namespace xyreg {

std::string to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::ZeroElement:
      return "zero-element";
    case FailureReason::PriorNotCoprime:
      return "prior-leads-not-coprime";
    case FailureReason::SubtractedNotCoprime:
      return "subtracted-monomials-not-coprime";
    case FailureReason::NextSharesBareVariable:
      return "lead-shares-variable-with-bare-monomial";
    case FailureReason::NextSharesLeadVariable:
      return "lead-shares-variable-with-prior-lead";
    case FailureReason::DegenerateResidue:
      return "degenerate-residue";
    case FailureReason::ConstantLead:
      return "constant-lead";
    case FailureReason::TailNotDominated:
      return "tail-not-dominated";
    case FailureReason::LeadMismatch:
      return "lead-mismatch";
  }
  return "unknown";
}

CoprimeCheck check_coprime_leads(std::span<const Polynomial> seq) {
  CoprimeCheck result;
  result.leads.reserve(seq.size());
  for (const Polynomial& p : seq) result.leads.push_back(p.lead_monomial());
  for (std::size_t i = 0; i < seq.size() && result.coprime; ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (!coprime(result.leads[i], result.leads[j])) {
        result.coprime = false;
        result.witness = std::make_pair(i, j);
        break;
      }
    }
  }
  return result;
}

CoprimeCheck check_coprime_leads(std::span<const Polynomial> seq, const OrderPtr& order) {
  std::vector<Polynomial> sorted;
  sorted.reserve(seq.size());
  for (const Polynomial& p : seq) sorted.push_back(p.with_order(order));
  return check_coprime_leads(sorted);
}

namespace {

bool pairwise_coprime(std::span<const EffectiveElement> elems) {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (!coprime(elems[i].effective_lead, elems[j].effective_lead)) return false;
    }
  }
  return true;
}

bool strict_multiplier(const Polynomial& multiplier, std::span<const EffectiveElement> prior) {
  if (multiplier.size() != 1 || !multiplier.lead().coeff.is_one()) return false;
  const Monomial& b = multiplier.lead_monomial();
  if (b.is_one()) return false;
  for (const EffectiveElement& e : prior) {
    if (e.role != Role::BareMonomial && b.divides(e.effective_lead) && !(b == e.effective_lead)) return true;
  }
  return false;
}

// Checks shared by the certifier and the re-checker once the residue is known.
std::optional<StepFailure> evaluate_checks(std::span<const EffectiveElement> prior, TechnicalStep& step) {
  TechnicalChecks& c = step.checks;
  c.prior_leads_coprime = pairwise_coprime(prior);

  c.subtracted_coprime = true;
  for (std::size_t i = 0; i < step.subtractions.size(); ++i) {
    if (!coprime(step.subtractions[i].monomial, step.next)) c.subtracted_coprime = false;
    for (std::size_t j = i + 1; j < step.subtractions.size(); ++j) {
      if (!coprime(step.subtractions[i].monomial, step.subtractions[j].monomial)) c.subtracted_coprime = false;
    }
  }
  c.next_coprime_to_bare = true;
  c.next_coprime_to_leads = true;
  for (const EffectiveElement& e : prior) {
    if (coprime(e.effective_lead, step.next)) continue;
    (e.role == Role::BareMonomial ? c.next_coprime_to_bare : c.next_coprime_to_leads) = false;
  }
  c.residue_nonconstant = !step.next.is_one();
  c.tail_dominated = true;
  const auto& terms = step.residue.terms();
  for (std::size_t k = 1; k < terms.size(); ++k) {
    if (!step.residue.order()->greater(step.next, terms[k].mono)) c.tail_dominated = false;
  }

  if (!c.prior_leads_coprime) return StepFailure{FailureReason::PriorNotCoprime, "certified prefix has overlapping leads"};
  if (!c.residue_nonconstant) return StepFailure{FailureReason::ConstantLead, "residue lead is a constant"};
  if (!c.subtracted_coprime) {
    return StepFailure{FailureReason::SubtractedNotCoprime, "subtracted monomials and new lead are not pairwise coprime"};
  }
  if (!c.next_coprime_to_bare) {
    return StepFailure{FailureReason::NextSharesBareVariable, "new lead shares a variable with an earlier bare monomial"};
  }
  if (!c.next_coprime_to_leads) {
    return StepFailure{FailureReason::NextSharesLeadVariable, "new lead shares a variable with an earlier lead"};
  }
  if (!c.tail_dominated) return StepFailure{FailureReason::TailNotDominated, "residue tail not below its lead"};
  return std::nullopt;
}

Polynomial residue_of(const Polynomial& incoming, const std::vector<Subtraction>& subtractions) {
  Polynomial r = incoming;
  for (const Subtraction& s : subtractions) {
    r = r - s.multiplier * Polynomial::monomial(incoming.field(), incoming.order(), s.monomial);
  }
  return r;
}

std::optional<StepFailure> coprime_extend(std::span<const EffectiveElement> prior, const Monomial& lead) {
  if (lead.is_one()) return StepFailure{FailureReason::ConstantLead, "element is a unit"};
  for (const EffectiveElement& e : prior) {
    if (coprime(e.effective_lead, lead)) continue;
    if (e.role == Role::BareMonomial) {
      return StepFailure{FailureReason::NextSharesBareVariable, "lead shares a variable with an earlier bare monomial"};
    }
    return StepFailure{FailureReason::NextSharesLeadVariable, "lead shares a variable with an earlier lead"};
  }
  return std::nullopt;
}

}  // namespace

TechnicalOutcome check_technical_step(std::span<const EffectiveElement> prior, const Polynomial& incoming) {
  if (incoming.is_zero()) return StepFailure{FailureReason::ZeroElement, "incoming element is zero"};

  TechnicalStep step{incoming, {}, Polynomial(incoming.field(), incoming.order()), incoming.field().one(),
                     Monomial(incoming.nvars()), {}, false};
  // Terms go to the first earlier bare monomial dividing them; subtractions are listed in prefix order.
  std::vector<std::vector<Term>> multipliers(prior.size());
  std::vector<Term> residue;
  for (const Term& t : incoming.terms()) {
    std::size_t k = 0;
    while (k < prior.size() &&
           (prior[k].role != Role::BareMonomial || !prior[k].effective_lead.divides(t.mono))) {
      ++k;
    }
    if (k == prior.size()) {
      residue.push_back(t);
    } else {
      multipliers[k].push_back(Term{t.coeff, t.mono / prior[k].effective_lead});
    }
  }
  for (std::size_t k = 0; k < prior.size(); ++k) {
    if (multipliers[k].empty()) continue;
    step.subtractions.push_back(Subtraction{
        prior[k].effective_lead,
        Polynomial::from_terms(incoming.field(), incoming.order(), std::move(multipliers[k]))});
  }
  step.residue = Polynomial::from_terms(incoming.field(), incoming.order(), std::move(residue));

  // The decomposition must be an identity, not just a partition of terms.
  if (!(residue_of(incoming, step.subtractions) == step.residue)) {
    throw std::logic_error("technical-step decomposition does not reproduce the residue");
  }
  if (step.residue.is_zero()) {
    return StepFailure{FailureReason::DegenerateResidue, "nothing left after subtracting bare-monomial multiples"};
  }
  step.lead_coefficient = step.residue.lead().coeff;
  step.next = step.residue.lead_monomial();

  step.strict_form = true;
  for (const Subtraction& s : step.subtractions) {
    if (!strict_multiplier(s.multiplier, prior)) step.strict_form = false;
  }
  if (auto failure = evaluate_checks(prior, step)) return *failure;
  return step;
}

RegularityCertificate certify_sequence(std::span<const LabeledPolynomial> seq) {
  RegularityCertificate cert;
  if (!seq.empty()) {
    cert.field = seq.front().poly.field();
    cert.order = seq.front().poly.order();
  }
  std::vector<EffectiveElement> prior;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const auto fail = [&](const StepFailure& f) {
      cert.verdict = Verdict{false, k, f.reason, seq[k].label + ": " + f.detail};
    };
    const Polynomial& p = seq[k].poly;
    if (p.is_zero()) {
      fail(StepFailure{FailureReason::ZeroElement, "element is zero"});
      return cert;
    }
    const bool bare = p.size() == 1;
    const bool has_subtractable =
        !bare && std::any_of(p.terms().begin(), p.terms().end(), [&prior](const Term& t) {
          return std::any_of(prior.begin(), prior.end(), [&t](const EffectiveElement& e) {
            return e.role == Role::BareMonomial && e.effective_lead.divides(t.mono);
          });
        });
    if (!has_subtractable) {
      if (auto failure = coprime_extend(prior, p.lead_monomial())) {
        fail(*failure);
        return cert;
      }
      const Role role = bare ? Role::BareMonomial : Role::Base;
      cert.steps.push_back(CertificateStep{StepKind::CoprimeExtend, seq[k].label, p, role, p.lead_monomial(), std::nullopt});
      prior.push_back(EffectiveElement{p, p.lead_monomial(), role});
      continue;
    }
    TechnicalOutcome outcome = check_technical_step(prior, p);
    if (const auto* failure = std::get_if<StepFailure>(&outcome)) {
      fail(*failure);
      return cert;
    }
    auto& step = std::get<TechnicalStep>(outcome);
    cert.steps.push_back(CertificateStep{StepKind::Technical, seq[k].label, p, Role::Technical, step.next, step});
    prior.push_back(EffectiveElement{p, step.next, Role::Technical});
  }
  cert.verdict = Verdict{true, std::nullopt, std::nullopt, ""};
  return cert;
}

Verdict recheck(const RegularityCertificate& cert) {
  std::vector<EffectiveElement> prior;
  for (std::size_t k = 0; k < cert.steps.size(); ++k) {
    const CertificateStep& s = cert.steps[k];
    const auto fail = [&](FailureReason reason, const std::string& detail) {
      return Verdict{false, k, reason, s.label + ": " + detail};
    };
    if (s.element.is_zero()) return fail(FailureReason::ZeroElement, "element is zero");
    if (s.kind == StepKind::CoprimeExtend) {
      if (s.technical) return fail(FailureReason::LeadMismatch, "coprime step carries a decomposition");
      if (!(s.element.lead_monomial() == s.effective_lead)) {
        return fail(FailureReason::LeadMismatch, "stored lead differs from the element's lead");
      }
      if ((s.role == Role::BareMonomial) != (s.element.size() == 1) || s.role == Role::Technical) {
        return fail(FailureReason::LeadMismatch, "role does not match the element");
      }
      if (auto failure = coprime_extend(prior, s.effective_lead)) return fail(failure->reason, failure->detail);
      prior.push_back(EffectiveElement{s.element, s.effective_lead, s.role});
      continue;
    }
    if (!s.technical || s.role != Role::Technical) return fail(FailureReason::LeadMismatch, "technical step without data");
    TechnicalStep step = *s.technical;
    for (const Subtraction& sub : step.subtractions) {
      const bool known = std::any_of(prior.begin(), prior.end(), [&sub](const EffectiveElement& e) {
        return e.role == Role::BareMonomial && e.effective_lead == sub.monomial;
      });
      if (!known) return fail(FailureReason::SubtractedNotCoprime, "subtracted monomial is not an earlier bare element");
    }
    step.residue = residue_of(s.element, step.subtractions);
    if (step.residue.is_zero()) return fail(FailureReason::DegenerateResidue, "residue vanishes");
    if (!(step.residue.lead_monomial() == step.next) || !(step.next == s.effective_lead)) {
      return fail(FailureReason::LeadMismatch, "stored effective lead differs from the residue lead");
    }
    if (auto failure = evaluate_checks(prior, step)) return fail(failure->reason, failure->detail);
    prior.push_back(EffectiveElement{s.element, s.effective_lead, Role::Technical});
  }
  if (!cert.verdict.certified) {
    // A stored failure is reproduced only if the stored steps stop exactly where it says.
    if (cert.verdict.failed_step != cert.steps.size()) {
      return Verdict{false, cert.steps.size(), FailureReason::LeadMismatch, "stored failure index is inconsistent"};
    }
    return cert.verdict;
  }
  return Verdict{true, std::nullopt, std::nullopt, ""};
}

}  // namespace xyreg
