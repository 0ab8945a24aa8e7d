#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "xyreg/polynomial.hpp"

namespace xyreg {

struct LabeledPolynomial {
  std::string label;
  Polynomial poly;
};

/// How an element entered a certified sequence.
enum class Role {
  Base,          // lead coprime to everything before it
  BareMonomial,  // a single term, e.g. an inserted variable
  Technical,     // lead taken after subtracting multiples of earlier bare monomials
};

/// A certified element together with the leading monomial that certification relies on.
/// For Base and BareMonomial this is the true lead; for Technical it is the lead of the
/// element minus its recorded multiples of earlier bare monomials.
struct EffectiveElement {
  Polynomial original;
  Monomial effective_lead;
  Role role;
};

struct CoprimeCheck {
  bool coprime = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // first offending index pair
  std::vector<Monomial> leads;
};

/// Pairwise coprimality of leading monomials. UndefinedLeadError if any element is zero.
CoprimeCheck check_coprime_leads(std::span<const Polynomial> seq);
CoprimeCheck check_coprime_leads(std::span<const Polynomial> seq, const OrderPtr& order);

struct Subtraction {
  Monomial monomial;      // an earlier bare monomial m_i
  Polynomial multiplier;  // b_i, so that b_i * m_i is removed from the incoming element
};

struct TechnicalChecks {
  bool prior_leads_coprime = false;    // effective leads of the certified prefix
  bool subtracted_coprime = false;     // subtracted monomials and the new lead, pairwise
  bool next_coprime_to_bare = false;   // new lead against every earlier bare monomial
  bool next_coprime_to_leads = false;  // new lead against every earlier non-bare effective lead
  bool residue_nonconstant = false;
  bool tail_dominated = false;         // every residue term below the new lead

  bool all() const {
    return prior_leads_coprime && subtracted_coprime && next_coprime_to_bare && next_coprime_to_leads &&
           residue_nonconstant && tail_dominated;
  }
};

struct TechnicalStep {
  Polynomial incoming;
  std::vector<Subtraction> subtractions;
  Polynomial residue;     // incoming - sum(multiplier * monomial), before normalization
  Scalar lead_coefficient;  // residue lead coefficient; the residue is divided by it
  Monomial next;          // lead monomial of the residue (the new effective lead)
  TechnicalChecks checks;
  /// Every multiplier is a single monic term dividing the effective lead of an earlier
  /// non-bare element.
  bool strict_form = false;
};

enum class FailureReason {
  ZeroElement,
  PriorNotCoprime,
  SubtractedNotCoprime,
  NextSharesBareVariable,
  NextSharesLeadVariable,
  DegenerateResidue,
  ConstantLead,
  TailNotDominated,
  LeadMismatch,
};

std::string to_string(FailureReason reason);

struct StepFailure {
  FailureReason reason;
  std::string detail;
};

using TechnicalOutcome = std::variant<TechnicalStep, StepFailure>;

/// Decomposes `incoming` against the bare monomials of `prior`: each term divisible by some
/// earlier bare monomial (first match in prefix order) is moved to that monomial's multiplier,
/// the lead of what is left becomes the new effective lead, and all coprimality and
/// tail-dominance checks are evaluated. Multipliers may be arbitrary; strict_form records
/// whether they are cofactors of earlier leads.
TechnicalOutcome check_technical_step(std::span<const EffectiveElement> prior, const Polynomial& incoming);

enum class StepKind { CoprimeExtend, Technical };

struct CertificateStep {
  StepKind kind;
  std::string label;
  Polynomial element;
  Role role;
  Monomial effective_lead;
  std::optional<TechnicalStep> technical;
};

struct Verdict {
  bool certified = false;
  std::optional<std::size_t> failed_step;  // 0-based
  std::optional<FailureReason> reason;
  std::string detail;

  friend bool operator==(const Verdict& a, const Verdict& b) {
    return a.certified == b.certified && a.failed_step == b.failed_step && a.reason == b.reason;
  }
};

struct RegularityCertificate {
  std::size_t n = 0;  // matrix size when the ring is K[x_ij, y_ij]
  Field field = Field::prime_field();
  OrderPtr order;
  std::vector<CertificateStep> steps;
  Verdict verdict;
  std::vector<std::string> notes;
};

/// Walks `seq` in order, extending the certified prefix one element at a time. Single-term
/// elements and elements with no subtractable terms must have leads coprime to the prefix;
/// the rest go through check_technical_step. Stops at the first failure.
RegularityCertificate certify_sequence(std::span<const LabeledPolynomial> seq);

/// Re-validates a certificate from its stored data: recomputes each residue from the stored
/// subtractions and re-runs every lead and gcd check, without redoing the decomposition.
Verdict recheck(const RegularityCertificate& cert);

}  // namespace xyreg
