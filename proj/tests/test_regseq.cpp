#include <doctest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "xyreg/certificate.hpp"
#include "xyreg/errors.hpp"
#include "xyreg/groebner.hpp"
#include "xyreg/oracle.hpp"
#include "xyreg/pattern.hpp"
#include "xyreg/serialize.hpp"

using namespace xyreg;

namespace {

std::vector<Polynomial> polys_of(const std::vector<LabeledPolynomial>& seq) {
  std::vector<Polynomial> out;
  for (const LabeledPolynomial& l : seq) out.push_back(l.poly);
  return out;
}

std::vector<Polynomial> full_set_n2(const GenericProduct& p) {
  return {p.f(1, 1), p.f(1, 2), p.f(2, 1), p.f(2, 2)};
}

const CertificateStep& step_labeled(const RegularityCertificate& cert, const std::string& label) {
  const auto it = std::find_if(cert.steps.begin(), cert.steps.end(),
                               [&](const CertificateStep& s) { return s.label == label; });
  REQUIRE(it != cert.steps.end());
  return *it;
}

}  // namespace

TEST_SUITE("coprime leads") {
  TEST_CASE("column one plus y12 is coprime") {
    for (std::size_t n = 2; n <= 5; ++n) {
      const GenericProduct p(n);
      std::vector<Polynomial> seq;
      for (std::size_t i = 1; i <= n; ++i) seq.push_back(p.f(i, 1));
      seq.push_back(p.y(1, 2));
      CHECK(check_coprime_leads(seq).coprime);
    }
  }

  TEST_CASE("f11, f12 share x11") {
    const GenericProduct p(2);
    const std::vector<Polynomial> seq{p.f(1, 1), p.f(1, 2)};
    const CoprimeCheck c = check_coprime_leads(seq);
    CHECK_FALSE(c.coprime);
    REQUIRE(c.witness.has_value());
    CHECK(*c.witness == std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(c.leads[0] == p.table().variable(MatrixVar::X, 1, 1) * p.table().variable(MatrixVar::Y, 1, 1));
    CHECK(c.leads[1] == p.table().variable(MatrixVar::X, 1, 1) * p.table().variable(MatrixVar::Y, 1, 2));
  }

  TEST_CASE("singleton and zero element") {
    const GenericProduct p(2);
    CHECK(check_coprime_leads(std::vector<Polynomial>{p.x(1, 1)}).coprime);
    const std::vector<Polynomial> with_zero{p.x(1, 1), Polynomial(p.field(), p.order())};
    CHECK_THROWS_AS(check_coprime_leads(with_zero), UndefinedLeadError);
  }

  TEST_CASE("re-ordering changes leads") {
    const GenericProduct p(2);
    const std::vector<Polynomial> seq{p.f(1, 1), p.f(1, 2)};
    // Under grevlex with the natural slot order the leads are x11 y11 and x11 y12 as well.
    CHECK_FALSE(check_coprime_leads(seq, make_order(MonomialOrder::grevlex(8))).coprime);
  }
}

TEST_SUITE("technical step") {
  TEST_CASE("f12 against column one and y12") {
    for (std::size_t n = 2; n <= 5; ++n) {
      CAPTURE(n);
      const GenericProduct p(n);
      const VariableTable& t = p.table();
      std::vector<EffectiveElement> prior;
      for (std::size_t i = 1; i <= n; ++i) {
        prior.push_back(EffectiveElement{p.f(i, 1), p.f(i, 1).lead_monomial(), Role::Base});
      }
      prior.push_back(EffectiveElement{p.y(1, 2), t.variable(MatrixVar::Y, 1, 2), Role::BareMonomial});
      const TechnicalOutcome out = check_technical_step(prior, p.f(1, 2));
      REQUIRE(std::holds_alternative<TechnicalStep>(out));
      const TechnicalStep& step = std::get<TechnicalStep>(out);
      REQUIRE(step.subtractions.size() == 1);
      CHECK(step.subtractions[0].monomial == t.variable(MatrixVar::Y, 1, 2));
      CHECK(step.subtractions[0].multiplier == p.x(1, 1));
      CHECK(step.next == t.variable(MatrixVar::X, 1, 2) * t.variable(MatrixVar::Y, 2, 2));
      CHECK(step.strict_form);
      CHECK(step.checks.all());
      CHECK(step.lead_coefficient.is_one());
    }
  }

  TEST_CASE("f32 at n = 4 uses a non-cofactor multiplier") {
    const RegularityCertificate cert = certify_theorem(4);
    REQUIRE(cert.verdict.certified);
    const CertificateStep& step = step_labeled(cert, "f[3,2]");
    REQUIRE(step.technical.has_value());
    const GenericProduct p(4);
    const VariableTable& t = p.table();
    const TechnicalStep& tech = *step.technical;
    REQUIRE(tech.subtractions.size() == 2);
    CHECK(tech.subtractions[0].monomial == t.variable(MatrixVar::Y, 1, 2));
    CHECK(tech.subtractions[0].multiplier == p.x(3, 1));
    CHECK(tech.subtractions[1].monomial == t.variable(MatrixVar::Y, 3, 2));
    CHECK(tech.subtractions[1].multiplier == p.x(3, 3));
    CHECK(tech.next == t.variable(MatrixVar::X, 3, 4) * t.variable(MatrixVar::Y, 4, 2));
    CHECK_FALSE(tech.strict_form);
    CHECK(tech.checks.all());
  }

  TEST_CASE("lead sharing a variable with an earlier lead fails") {
    const GenericProduct p(2);
    const std::vector<EffectiveElement> prior{
        EffectiveElement{p.f(1, 1), p.f(1, 1).lead_monomial(), Role::Base}};
    const TechnicalOutcome out = check_technical_step(prior, p.f(1, 2));
    REQUIRE(std::holds_alternative<StepFailure>(out));
    CHECK(std::get<StepFailure>(out).reason == FailureReason::NextSharesLeadVariable);

    const std::vector<LabeledPolynomial> seq{{"f[1,1]", p.f(1, 1)}, {"f[1,2]", p.f(1, 2)}};
    const RegularityCertificate cert = certify_sequence(seq);
    CHECK_FALSE(cert.verdict.certified);
    CHECK(cert.verdict.failed_step == std::optional<std::size_t>{1});
    CHECK(cert.verdict.reason == FailureReason::NextSharesLeadVariable);
  }

  TEST_CASE("degenerate and constant residues") {
    const GenericProduct p(2);
    const std::vector<EffectiveElement> prior{
        EffectiveElement{p.y(1, 1), p.y(1, 1).lead_monomial(), Role::BareMonomial}};
    const TechnicalOutcome gone = check_technical_step(prior, p.x(1, 1) * p.y(1, 1));
    REQUIRE(std::holds_alternative<StepFailure>(gone));
    CHECK(std::get<StepFailure>(gone).reason == FailureReason::DegenerateResidue);

    const Polynomial one = Polynomial::constant(p.field(), p.order(), p.field().one());
    const TechnicalOutcome constant = check_technical_step(prior, p.x(1, 1) * p.y(1, 1) + one);
    REQUIRE(std::holds_alternative<StepFailure>(constant));
    CHECK(std::get<StepFailure>(constant).reason == FailureReason::ConstantLead);

    const TechnicalOutcome zero = check_technical_step(prior, Polynomial(p.field(), p.order()));
    REQUIRE(std::holds_alternative<StepFailure>(zero));
    CHECK(std::get<StepFailure>(zero).reason == FailureReason::ZeroElement);
  }

  TEST_CASE("unit residue coefficient is normalized") {
    const GenericProduct p(2);
    const std::vector<EffectiveElement> prior{
        EffectiveElement{p.y(1, 1), p.y(1, 1).lead_monomial(), Role::BareMonomial}};
    const Polynomial h = p.x(1, 1) * p.y(1, 1) + p.x(2, 2).scaled(p.field().from_int(3)) * p.y(2, 2);
    const TechnicalOutcome out = check_technical_step(prior, h);
    REQUIRE(std::holds_alternative<TechnicalStep>(out));
    CHECK(std::get<TechnicalStep>(out).lead_coefficient == p.field().from_int(3));
    CHECK(std::get<TechnicalStep>(out).checks.all());
  }
}

TEST_SUITE("oracles") {
  TEST_CASE("Hilbert oracle examples") {
    const GenericProduct p(2);
    CHECK(regular_oracle_hilbert(polys_of(build_F(p))) == Regularity::Regular);
    CHECK(regular_oracle_hilbert(full_set_n2(p)) == Regularity::NotRegular);
    CHECK(regular_oracle_hilbert(std::vector<Polynomial>{p.x(1, 1), p.y(1, 1)}) == Regularity::Regular);
    CHECK(regular_oracle_hilbert(std::vector<Polynomial>{}) == Regularity::Regular);
    const Polynomial one = Polynomial::constant(p.field(), p.order(), p.field().one());
    CHECK(regular_oracle_hilbert(std::vector<Polynomial>{one}) == Regularity::NotRegular);
    CHECK_THROWS_AS(regular_oracle_hilbert(std::vector<Polynomial>{p.x(1, 1) + one}), NonHomogeneousError);
  }

  TEST_CASE("colon examples") {
    const GenericProduct p(2);
    const auto gb = [&](std::vector<Polynomial> gens) {
      for (Polynomial& g : gens) g = g.with_order(oracle_order(8));
      return buchberger(gens);
    };
    const Polynomial y11 = p.y(1, 1).with_order(oracle_order(8));
    const Polynomial x11 = p.x(1, 1).with_order(oracle_order(8));
    CHECK(nonzerodivisor_colon(gb({p.x(1, 1)}), y11));
    CHECK_FALSE(nonzerodivisor_colon(gb({p.x(1, 1) * p.y(1, 1)}), x11));
    const GroebnerBasis prefix = gb({p.f(1, 1), p.f(1, 2), p.f(2, 1)});
    CHECK_FALSE(nonzerodivisor_colon(prefix, p.f(2, 2).with_order(oracle_order(8))));
    const std::vector<Polynomial> colon = colon_ideal(prefix, p.f(2, 2).with_order(oracle_order(8)));
    const bool has_new = std::any_of(colon.begin(), colon.end(), [&](const Polynomial& c) { return !ideal_contains(prefix, c); });
    CHECK(has_new);
    for (const Polynomial& c : colon) {
      CHECK(ideal_contains(prefix, c * p.f(2, 2).with_order(oracle_order(8))));
      CHECK(c.nvars() == 8);
    }
  }

  TEST_CASE("sequence oracle examples") {
    const GenericProduct p(2);
    for (OracleMethod m : {OracleMethod::Hilbert, OracleMethod::Colon}) {
      CAPTURE(to_string(m));
      CHECK(sequence_oracle(polys_of(build_F(p)), m).verdict == Regularity::Regular);
      const SequenceVerdict bad = sequence_oracle(full_set_n2(p), m);
      CHECK(bad.verdict == Regularity::NotRegular);
      CHECK(bad.first_failure == std::optional<std::size_t>{4});
      CHECK(sequence_oracle(std::vector<Polynomial>{}, m).verdict == Regularity::Regular);
    }
    BuchbergerOptions tight;
    tight.budget.max_pairs = 1;
    CHECK(sequence_oracle(full_set_n2(p), OracleMethod::Hilbert, tight).verdict == Regularity::Inconclusive);
    CHECK(sequence_oracle(full_set_n2(p), OracleMethod::Colon, tight).verdict == Regularity::Inconclusive);
  }

  TEST_CASE("Hilbert data for F") {
    for (std::size_t n : {2u, 3u}) {
      const GenericProduct p(n);
      const std::vector<Polynomial> F = polys_of(build_F(p));
      const SequenceVerdict v = sequence_oracle(F, OracleMethod::Hilbert);
      REQUIRE(v.hilbert.has_value());
      const std::vector<std::uint64_t> degrees(F.size(), 2);
      CHECK(v.hilbert->numerator == complete_intersection_numerator(degrees));
      CHECK(v.hilbert->nvars == 2 * n * n);
    }
    const SequenceVerdict v2 = sequence_oracle(polys_of(build_F(GenericProduct(2))), OracleMethod::Hilbert);
    CHECK(v2.hilbert->series(2) == std::vector<std::int64_t>{1, 8, 33});
  }

  TEST_CASE("all orderings of F at n = 2 are regular") {
    const GenericProduct p(2);
    std::vector<Polynomial> F = polys_of(build_F(p));
    std::vector<std::size_t> idx{0, 1, 2};
    int count = 0;
    do {
      std::vector<Polynomial> seq;
      for (std::size_t k : idx) seq.push_back(F[k]);
      CHECK(sequence_oracle(seq, OracleMethod::Hilbert).verdict == Regularity::Regular);
      CHECK(sequence_oracle(seq, OracleMethod::Colon).verdict == Regularity::Regular);
      ++count;
    } while (std::next_permutation(idx.begin(), idx.end()));
    CHECK(count == 6);
  }

  TEST_CASE("coprime leads imply regular (Hilbert oracle)") {
    std::mt19937 rng(2024);
    const Field f = Field::prime_field();
    std::uniform_int_distribution<std::size_t> nv(2, 6);
    int disagreements = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t nvars = nv(rng);
      const auto orders = testing::shipped_orders(nvars);
      const OrderPtr& order = orders[static_cast<std::size_t>(trial) % orders.size()];
      const std::vector<Polynomial> seq = testing::random_coprime_lead_sequence(rng, f, order);
      REQUIRE(check_coprime_leads(seq).coprime);
      if (regular_oracle_hilbert(seq) != Regularity::Regular) ++disagreements;
    }
    CHECK(disagreements == 0);
  }

  TEST_CASE("Hilbert and colon methods agree") {
    std::mt19937 rng(77);
    const Field f = Field::prime_field();
    const OrderPtr order = make_order(MonomialOrder::grevlex(4));
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Polynomial> seq;
      std::uniform_int_distribution<int> len(1, 3);
      const int k = len(rng);
      for (int i = 0; i < k; ++i) {
        Polynomial q = testing::random_homogeneous(rng, f, order, 2, 2);
        if (!q.is_zero()) seq.push_back(std::move(q));
      }
      const SequenceVerdict h = sequence_oracle(seq, OracleMethod::Hilbert);
      const SequenceVerdict c = sequence_oracle(seq, OracleMethod::Colon);
      if (h.verdict != Regularity::Inconclusive && c.verdict != Regularity::Inconclusive) {
        CHECK(h.verdict == c.verdict);
        CHECK(h.first_failure == c.first_failure);
      }
    }
  }

  TEST_CASE("certified augmented sequences are confirmed by both oracles") {
    for (std::size_t n : {2u, 3u}) {
      const GenericProduct p(n);
      REQUIRE(certify_theorem(n).verdict.certified);
      const std::vector<Polynomial> Ft = polys_of(build_Ftilde(p));
      CHECK(sequence_oracle(Ft, OracleMethod::Hilbert).verdict == Regularity::Regular);
      CHECK(sequence_oracle(Ft, OracleMethod::Colon).verdict == Regularity::Regular);
    }
  }

  TEST_CASE("greedy extension") {
    const GenericProduct p(2);
    const std::vector<Polynomial> F = polys_of(build_F(p));
    const std::vector<Polynomial> rest{p.f(2, 2)};
    const ExtensionReport r = greedy_extend(F, rest, OracleMethod::Hilbert);
    CHECK(r.sequence.size() == 3);
    CHECK(r.accepted.empty());
    REQUIRE(r.rejected.size() == 1);
    CHECK(r.rejected[0].verdict == Regularity::NotRegular);

    const std::vector<Polynomial> vars{p.x(1, 1), p.y(1, 1)};
    const ExtensionReport both = greedy_extend(std::vector<Polynomial>{}, vars, OracleMethod::Colon);
    CHECK(both.sequence.size() == 2);
    CHECK(both.accepted == std::vector<std::size_t>{0, 1});

    CHECK(greedy_extend(F, std::vector<Polynomial>{}, OracleMethod::Hilbert).sequence.size() == 3);
    CHECK_THROWS_AS(greedy_extend(full_set_n2(p), vars, OracleMethod::Hilbert), DomainError);
  }
}

TEST_SUITE("certificates") {
  TEST_CASE("recheck reproduces the verdict") {
    for (std::size_t n = 2; n <= 6; ++n) {
      const RegularityCertificate cert = certify_theorem(n);
      REQUIRE(cert.verdict.certified);
      CHECK(recheck(cert) == cert.verdict);
    }
  }

  TEST_CASE("JSON round trip") {
    for (std::size_t n = 2; n <= 4; ++n) {
      const RegularityCertificate cert = certify_theorem(n);
      const auto j = certificate_to_json(cert);
      const RegularityCertificate back = certificate_from_json(nlohmann::ordered_json::parse(j.dump()));
      CHECK(back.steps.size() == cert.steps.size());
      CHECK(recheck(back) == cert.verdict);
      CHECK(certificate_to_json(back) == j);
    }
  }

  TEST_CASE("tampered certificates are rejected") {
    RegularityCertificate cert = certify_theorem(3);
    const auto it = std::find_if(cert.steps.begin(), cert.steps.end(),
                                 [](const CertificateStep& s) { return s.technical.has_value() && !s.technical->subtractions.empty(); });
    REQUIRE(it != cert.steps.end());
    RegularityCertificate bad_multiplier = cert;
    auto& sub = bad_multiplier.steps[static_cast<std::size_t>(it - cert.steps.begin())].technical->subtractions[0];
    sub.multiplier = sub.multiplier + sub.multiplier;
    CHECK_FALSE(recheck(bad_multiplier).certified);

    RegularityCertificate bad_lead = cert;
    bad_lead.steps[0].effective_lead = bad_lead.steps[1].effective_lead;
    CHECK_FALSE(recheck(bad_lead).certified);
  }

  TEST_CASE("failure reasons have stable names") {
    CHECK(to_string(FailureReason::NextSharesLeadVariable) == "lead-shares-variable-with-prior-lead");
    CHECK(to_string(FailureReason::TailNotDominated) == "tail-not-dominated");
  }
}
