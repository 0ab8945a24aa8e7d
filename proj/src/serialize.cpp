#include "xyreg/serialize.hpp"

#include "xyreg/errors.hpp"
#include "xyreg/text.hpp"

namespace xyreg {

using json = nlohmann::ordered_json;

namespace {

std::string role_name(Role role) {
  switch (role) {
    case Role::Base:
      return "base";
    case Role::BareMonomial:
      return "bare";
    case Role::Technical:
      return "technical";
  }
  return "unknown";
}

Role role_from(const std::string& s) {
  if (s == "base") return Role::Base;
  if (s == "bare") return Role::BareMonomial;
  if (s == "technical") return Role::Technical;
  throw DomainError("unknown role '" + s + "'");
}

FailureReason reason_from(const std::string& s) {
  for (auto r : {FailureReason::ZeroElement, FailureReason::PriorNotCoprime, FailureReason::SubtractedNotCoprime,
                 FailureReason::NextSharesBareVariable, FailureReason::NextSharesLeadVariable,
                 FailureReason::DegenerateResidue, FailureReason::ConstantLead, FailureReason::TailNotDominated,
                 FailureReason::LeadMismatch}) {
    if (to_string(r) == s) return r;
  }
  throw DomainError("unknown failure reason '" + s + "'");
}

}  // namespace

Field parse_field_name(const std::string& name) {
  if (name == "rat") return Field::rationals();
  if (name.size() > 4 && name.starts_with("gf(") && name.back() == ')') {
    const std::string digits = name.substr(3, name.size() - 4);
    if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 10) {
      return Field::prime_field(static_cast<std::uint32_t>(std::stoull(digits)));
    }
  }
  throw DomainError("unknown field '" + name + "'");
}

OrderPtr order_from_name(const std::string& name, std::size_t n) {
  const VariableTable table(n);
  if (name == "paper") return diagonal_band_order(n);
  if (name == "grevlex") return make_order(MonomialOrder::grevlex(table.nvars()));
  if (name == "lex") return make_order(MonomialOrder::lex(table.nvars()));
  throw DomainError("unknown order '" + name + "'");
}

json certificate_to_json(const RegularityCertificate& cert) {
  const VariableTable table(cert.n);
  json steps = json::array();
  for (const CertificateStep& s : cert.steps) {
    json step{{"kind", s.kind == StepKind::CoprimeExtend ? "coprime_extend" : "technical"},
              {"label", s.label},
              {"role", role_name(s.role)},
              {"element", format_poly(s.element, table)},
              {"effective_lead", format_monomial(s.effective_lead, table)}};
    if (s.technical) {
      const TechnicalStep& t = *s.technical;
      json subs = json::array();
      for (const Subtraction& sub : t.subtractions) {
        subs.push_back({format_monomial(sub.monomial, table), format_poly(sub.multiplier, table)});
      }
      step["subtractions"] = subs;
      step["m_next"] = format_monomial(t.next, table);
      step["lead_coefficient"] = t.lead_coefficient.to_string();
      step["checks"] = {{"prior_leads_coprime", t.checks.prior_leads_coprime},
                        {"subtracted_coprime", t.checks.subtracted_coprime},
                        {"next_coprime_to_bare", t.checks.next_coprime_to_bare},
                        {"next_coprime_to_leads", t.checks.next_coprime_to_leads},
                        {"residue_nonconstant", t.checks.residue_nonconstant},
                        {"tail_dominated", t.checks.tail_dominated}};
      step["strict_form"] = t.strict_form;
    } else {
      step["subtractions"] = json::array();
      step["m_next"] = nullptr;
      step["checks"] = {{"lead_coprime_to_prior", true}};
      step["strict_form"] = nullptr;
    }
    steps.push_back(std::move(step));
  }
  json j{{"n", cert.n},
         {"order", cert.order ? cert.order->name() : "paper"},
         {"field", cert.field.name()},
         {"steps", std::move(steps)},
         {"verdict", cert.verdict.certified ? "certified" : "failed"},
         {"notes", cert.notes}};
  if (!cert.verdict.certified) {
    j["failed_step"] = cert.verdict.failed_step ? json(*cert.verdict.failed_step + 1) : json(nullptr);
    j["reason"] = cert.verdict.reason ? json(to_string(*cert.verdict.reason)) : json(nullptr);
    j["detail"] = cert.verdict.detail;
  }
  return j;
}

RegularityCertificate certificate_from_json(const json& j) {
  RegularityCertificate cert;
  cert.n = j.at("n").get<std::size_t>();
  const VariableTable table(cert.n);
  cert.field = parse_field_name(j.at("field").get<std::string>());
  cert.order = order_from_name(j.at("order").get<std::string>(), cert.n);
  const auto poly = [&](const json& v) { return parse_poly(v.get<std::string>(), table, cert.field, cert.order); };
  const auto mono = [&](const json& v) { return parse_monomial(v.get<std::string>(), table); };

  for (const json& s : j.at("steps")) {
    const std::string kind = s.at("kind").get<std::string>();
    CertificateStep step{kind == "technical" ? StepKind::Technical : StepKind::CoprimeExtend,
                         s.at("label").get<std::string>(),
                         poly(s.at("element")),
                         role_from(s.at("role").get<std::string>()),
                         mono(s.at("effective_lead")),
                         std::nullopt};
    if (kind != "technical" && kind != "coprime_extend") throw DomainError("unknown step kind '" + kind + "'");
    if (step.kind == StepKind::Technical) {
      TechnicalStep t{step.element, {}, Polynomial(cert.field, cert.order), cert.field.one(), mono(s.at("m_next")), {}, false};
      for (const json& pair : s.at("subtractions")) {
        t.subtractions.push_back(Subtraction{mono(pair.at(0)), poly(pair.at(1))});
      }
      const json& c = s.at("checks");
      t.checks.prior_leads_coprime = c.value("prior_leads_coprime", false);
      t.checks.subtracted_coprime = c.value("subtracted_coprime", false);
      t.checks.next_coprime_to_bare = c.value("next_coprime_to_bare", false);
      t.checks.next_coprime_to_leads = c.value("next_coprime_to_leads", false);
      t.checks.residue_nonconstant = c.value("residue_nonconstant", false);
      t.checks.tail_dominated = c.value("tail_dominated", false);
      t.strict_form = s.at("strict_form").get<bool>();
      step.technical = std::move(t);
    }
    cert.steps.push_back(std::move(step));
  }
  const std::string verdict = j.at("verdict").get<std::string>();
  if (verdict == "certified") {
    cert.verdict = Verdict{true, std::nullopt, std::nullopt, ""};
  } else if (verdict == "failed") {
    cert.verdict.certified = false;
    if (j.contains("failed_step") && !j["failed_step"].is_null()) {
      cert.verdict.failed_step = j["failed_step"].get<std::size_t>() - 1;
    }
    if (j.contains("reason") && !j["reason"].is_null()) cert.verdict.reason = reason_from(j["reason"].get<std::string>());
    cert.verdict.detail = j.value("detail", "");
  } else {
    throw DomainError("unknown verdict '" + verdict + "'");
  }
  cert.notes = j.value("notes", std::vector<std::string>{});
  return cert;
}

json pattern_to_json(const PatternSpec& spec, const GenericProduct& product) {
  json columns = json::array();
  for (const PatternColumn& c : spec.columns) columns.push_back({{"t", c.t}, {"k", c.k}, {"rows", c.rows}});
  json f = json::array();
  for (const LabeledPolynomial& l : build_F(product)) {
    f.push_back({{"label", l.label}, {"poly", format_poly(l.poly, product.table())}});
  }
  json ftilde = json::array();
  for (const LabeledPolynomial& l : build_Ftilde(product)) {
    ftilde.push_back({{"label", l.label}, {"poly", format_poly(l.poly, product.table())}});
  }
  json entries = json::array();
  for (std::size_t i = 1; i <= spec.n; ++i) {
    for (std::size_t j = 1; j <= spec.n; ++j) {
      entries.push_back({{"label", label(PatternItem{ItemKind::Entry, i, j})},
                         {"poly", format_poly(product.f(i, j), product.table())},
                         {"selected", spec.is_selected(i, j)}});
    }
  }
  return json{{"n", spec.n},         {"columns", columns}, {"F", f},
              {"F_size", f.size()},  {"Ftilde", ftilde},   {"Ftilde_size", ftilde.size()},
              {"entries", entries}};
}

}  // namespace xyreg
