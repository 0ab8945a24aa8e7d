#include "xyreg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "xyreg/errors.hpp"
#include "xyreg/oracle.hpp"
#include "xyreg/pattern.hpp"
#include "xyreg/serialize.hpp"
#include "xyreg/text.hpp"

namespace xyreg {

namespace {

using json = nlohmann::ordered_json;

struct CommandConfig {
  std::string subcommand;
  std::size_t n = 0;
  std::string field = "gfp";
  bool field_given = false;
  std::uint32_t prime = Field::kDefaultPrime;
  std::string order = "paper";
  std::string method = "hilbert";
  std::string format = "text";
  std::string input;
  std::size_t budget_pairs = 0;  // 0: unlimited
  std::uint64_t budget_degree = 0;
  std::string out;

  bool json() const { return format == "json"; }

  Field make_field() const {
    return field == "rat" ? Field::rationals() : Field::prime_field(prime);
  }

  BuchbergerOptions groebner_options() const {
    BuchbergerOptions o;
    if (budget_pairs > 0) o.budget.max_pairs = budget_pairs;
    if (budget_degree > 0) o.budget.max_degree = budget_degree;
    return o;
  }

  OracleMethod oracle_method() const { return method == "colon" ? OracleMethod::Colon : OracleMethod::Hilbert; }
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

void validate(const CommandConfig& cfg, bool needs_n) {
  if (needs_n && cfg.n < 2) throw UsageError("--n must be at least 2");
  if (cfg.field == "gfp") {
    if (!is_prime(cfg.prime)) throw UsageError("--prime " + std::to_string(cfg.prime) + " is not prime");
    if (needs_n && cfg.prime <= cfg.n) throw UsageError("--prime must exceed --n");
  }
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read input file '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

std::vector<LabeledPolynomial> read_polynomials(const CommandConfig& cfg, const GenericProduct& product) {
  std::vector<LabeledPolynomial> out;
  for (const std::string& line : read_lines(cfg.input)) {
    out.push_back(LabeledPolynomial{"p" + std::to_string(out.size() + 1),
                                    parse_poly(line, product.table(), product.field(), product.order())});
  }
  return out;
}

std::vector<Polynomial> polys_of(const std::vector<LabeledPolynomial>& seq) {
  std::vector<Polynomial> out;
  out.reserve(seq.size());
  for (const auto& l : seq) out.push_back(l.poly);
  return out;
}

// ---------------------------------------------------------------------------

int cmd_gen(const CommandConfig& cfg, std::ostream& out) {
  validate(cfg, true);
  const GenericProduct product(cfg.n, cfg.make_field(), order_from_name(cfg.order, cfg.n));
  const PatternSpec spec = pattern_spec(cfg.n);
  if (cfg.json()) {
    out << pattern_to_json(spec, product).dump(2) << '\n';
    return kPropertyHolds;
  }
  out << "pattern (n = " << cfg.n << "):\n" << render_pattern_matrix(spec);
  out << "\nk_t:";
  for (const PatternColumn& c : spec.columns) out << ' ' << c.k;
  const auto F = build_F(product);
  out << "\n\nF (" << F.size() << " elements):\n";
  for (const auto& l : F) out << "  " << l.label << " = " << format_poly(l.poly, product.table()) << '\n';
  const auto Ft = build_Ftilde(product);
  out << "\nFtilde (" << Ft.size() << " elements):\n ";
  for (const auto& l : Ft) out << ' ' << l.label;
  out << '\n';
  return kPropertyHolds;
}

void print_certificate_text(const RegularityCertificate& cert, std::ostream& out) {
  const VariableTable table(cert.n);
  for (std::size_t k = 0; k < cert.steps.size(); ++k) {
    const CertificateStep& s = cert.steps[k];
    out << '[' << (k + 1) << "] " << (s.kind == StepKind::CoprimeExtend ? "COPRIME_EXTEND" : "TECHNICAL") << ' '
        << s.label << "  lead " << format_monomial(s.effective_lead, table);
    if (s.technical) {
      out << "  subtract";
      for (const Subtraction& sub : s.technical->subtractions) {
        out << " (" << format_poly(sub.multiplier, table) << ")*" << format_monomial(sub.monomial, table);
      }
      out << (s.technical->strict_form ? "  strict" : "  relaxed");
    }
    out << '\n';
  }
  for (const std::string& note : cert.notes) out << "note: " << note << '\n';
  if (cert.verdict.certified) {
    out << "verdict: certified\n";
  } else {
    out << "verdict: failed at step " << (cert.verdict.failed_step.value_or(0) + 1) << " ("
        << (cert.verdict.reason ? to_string(*cert.verdict.reason) : "unknown") << "): " << cert.verdict.detail << '\n';
  }
}

int cmd_certify(const CommandConfig& cfg, std::ostream& out) {
  validate(cfg, true);
  if (cfg.order != "paper") throw UsageError("certify runs under --order paper only");
  const RegularityCertificate cert = certify_theorem(cfg.n, cfg.make_field());
  if (cfg.json()) {
    out << certificate_to_json(cert).dump(2) << '\n';
  } else {
    print_certificate_text(cert, out);
  }
  return cert.verdict.certified ? kPropertyHolds : kPropertyFails;
}

int cmd_recheck(const CommandConfig& cfg, std::ostream& out) {
  if (cfg.input.empty()) throw UsageError("recheck needs --input CERTIFICATE.json");
  std::ifstream in(cfg.input);
  if (!in) throw UsageError("cannot read input file '" + cfg.input + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed certificate: ") + e.what());
  }
  RegularityCertificate cert;
  try {
    cert = certificate_from_json(j);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed certificate: ") + e.what());
  }
  const Verdict v = recheck(cert);
  const bool consistent = v == cert.verdict;
  if (cfg.json()) {
    out << json{{"verdict", v.certified ? "certified" : "failed"},
                {"consistent_with_stored", consistent},
                {"detail", v.detail}}
               .dump(2)
        << '\n';
  } else {
    out << "recheck: " << (v.certified ? "certified" : "failed") << (consistent ? "" : " (differs from stored verdict)");
    if (!v.detail.empty()) out << ": " << v.detail;
    out << '\n';
  }
  return v.certified && consistent ? kPropertyHolds : kPropertyFails;
}

int exit_for(Regularity r) {
  switch (r) {
    case Regularity::Regular:
      return kPropertyHolds;
    case Regularity::NotRegular:
      return kPropertyFails;
    case Regularity::Inconclusive:
      return kInconclusive;
  }
  return kInconclusive;
}

int cmd_oracle(const CommandConfig& cfg, std::ostream& out) {
  validate(cfg, true);
  const GenericProduct product(cfg.n, cfg.make_field(), order_from_name(cfg.order, cfg.n));
  const auto seq = cfg.input.empty() ? build_F(product) : read_polynomials(cfg, product);
  const SequenceVerdict v = sequence_oracle(polys_of(seq), cfg.oracle_method(), cfg.groebner_options());
  if (cfg.json()) {
    json steps = json::array();
    for (const OracleStep& s : v.steps) {
      steps.push_back({{"index", s.index}, {"verdict", to_string(s.verdict)}, {"note", s.note}});
    }
    json j{{"n", cfg.n},
           {"method", to_string(cfg.oracle_method())},
           {"length", seq.size()},
           {"verdict", to_string(v.verdict)},
           {"first_failure", v.first_failure ? json(*v.first_failure) : json(nullptr)},
           {"steps", steps},
           {"message", v.message}};
    if (v.hilbert) {
      j["hilbert_numerator"] = v.hilbert->numerator;
      j["expected_numerator"] = *v.expected_numerator;
      j["series"] = v.hilbert->series(6);
    }
    out << j.dump(2) << '\n';
  } else {
    out << "sequence:";
    for (const auto& l : seq) out << ' ' << l.label;
    out << "\nmethod: " << to_string(cfg.oracle_method()) << "\nverdict: " << to_string(v.verdict) << '\n';
    if (v.first_failure) out << "first failure: " << *v.first_failure << '\n';
    if (v.hilbert) {
      out << "hilbert numerator: " << intpoly_to_string(v.hilbert->numerator) << " / (1-t)^" << v.hilbert->nvars
          << "\nexpected numerator: " << intpoly_to_string(*v.expected_numerator) << '\n';
    }
    out << v.message << '\n';
  }
  return exit_for(v.verdict);
}

json relation_json(const RelationCheck& r, const VariableTable& table) {
  return json{{"relation", r.relation},
              {"residue", format_poly(r.residue, table)},
              {"cofactor", r.cofactor},
              {"cofactor_outside_prefix", r.cofactor_outside_prefix},
              {"multiple_inside_prefix", r.multiple_inside_prefix},
              {"holds", r.holds()}};
}

int cmd_counterexample(const CommandConfig& cfg, std::ostream& out) {
  validate(cfg, false);
  if (cfg.n != 0 && cfg.n != 2) throw UsageError("counterexample is defined for --n 2 only");
  const Field field = cfg.field_given ? cfg.make_field() : Field::rationals();
  const CounterexampleReport report = counterexample_n2(field);
  const VariableTable table(2);
  if (cfg.json()) {
    out << json{{"field", field.name()},
                {"quoted", relation_json(report.quoted, table)},
                {"adjugate", relation_json(report.adjugate, table)},
                {"quoted_checks_pass", report.quoted_checks_pass()},
                {"zerodivisor_established", report.zerodivisor_established()}}
               .dump(2)
        << '\n';
  } else {
    out << "field: " << field.name() << '\n';
    for (const RelationCheck* r : {&report.quoted, &report.adjugate}) {
      out << "relation: " << r->relation << "\n  residue: " << format_poly(r->residue, table)
          << "\n  " << r->cofactor << " outside <f11,f12,f21>: " << (r->cofactor_outside_prefix ? "yes" : "no")
          << "\n  " << r->cofactor << "*f22 inside <f11,f12,f21>: " << (r->multiple_inside_prefix ? "yes" : "no")
          << '\n';
    }
    out << "quoted relation verified: " << (report.quoted_checks_pass() ? "yes" : "no")
        << "\nf22 zerodivisor modulo <f11,f12,f21>: " << (report.zerodivisor_established() ? "yes" : "no") << '\n';
  }
  return report.quoted_checks_pass() ? kPropertyHolds : kPropertyFails;
}

int cmd_search(const CommandConfig& cfg, std::ostream& out) {
  validate(cfg, true);
  const GenericProduct product(cfg.n, cfg.make_field(), order_from_name(cfg.order, cfg.n));
  const PatternSpec spec = pattern_spec(cfg.n);
  const auto base = build_F(product);
  std::vector<LabeledPolynomial> candidates;
  for (std::size_t i = 1; i <= cfg.n; ++i) {
    for (std::size_t j = 1; j <= cfg.n; ++j) {
      if (!spec.is_selected(i, j)) candidates.push_back({label(PatternItem{ItemKind::Entry, i, j}), product.f(i, j)});
    }
  }
  const auto options = cfg.groebner_options();
  const SequenceVerdict start = sequence_oracle(polys_of(base), cfg.oracle_method(), options);
  if (start.verdict != Regularity::Regular) {
    out << "base sequence is " << to_string(start.verdict) << ": " << start.message << '\n';
    return exit_for(start.verdict);
  }
  const ExtensionReport report = greedy_extend(polys_of(base), polys_of(candidates), cfg.oracle_method(), options);
  if (cfg.json()) {
    json accepted = json::array();
    for (std::size_t c : report.accepted) accepted.push_back(candidates[c].label);
    json rejected = json::array();
    for (const Rejection& r : report.rejected) {
      rejected.push_back({{"label", candidates[r.candidate].label}, {"verdict", to_string(r.verdict)}, {"message", r.message}});
    }
    out << json{{"n", cfg.n},
                {"base_length", base.size()},
                {"final_length", report.sequence.size()},
                {"accepted", accepted},
                {"rejected", rejected}}
               .dump(2)
        << '\n';
  } else {
    out << "base length: " << base.size() << "\nfinal length: " << report.sequence.size() << "\naccepted:";
    for (std::size_t c : report.accepted) out << ' ' << candidates[c].label;
    out << "\nrejected:";
    for (const Rejection& r : report.rejected) out << ' ' << candidates[r.candidate].label << '(' << to_string(r.verdict) << ')';
    out << '\n';
  }
  return kPropertyHolds;
}

int cmd_gb(const CommandConfig& cfg, std::ostream& out) {
  validate(cfg, true);
  if (cfg.input.empty()) throw UsageError("gb needs --input FILE");
  const GenericProduct product(cfg.n, cfg.make_field(), order_from_name(cfg.order, cfg.n));
  const auto gens = read_polynomials(cfg, product);
  const auto polys = polys_of(gens);
  if (std::all_of(polys.begin(), polys.end(), [](const Polynomial& p) { return p.is_zero(); })) {
    throw UsageError("input contains no non-zero polynomial");
  }
  const GroebnerBasis gb = buchberger(polys, cfg.groebner_options());
  if (cfg.json()) {
    json basis = json::array();
    for (const Polynomial& g : gb.generators()) basis.push_back(format_poly(g, product.table()));
    out << json{{"order", cfg.order},
                {"field", product.field().name()},
                {"basis", basis},
                {"pairs_reduced", gb.stats().pairs_reduced}}
               .dump(2)
        << '\n';
  } else {
    for (const Polynomial& g : gb.generators()) out << format_poly(g, product.table()) << '\n';
  }
  return kPropertyHolds;
}

void add_common(CLI::App* sub, CommandConfig& cfg, bool with_n) {
  if (with_n) sub->add_option("--n", cfg.n, "Matrix size (n >= 2)")->required();
  sub->add_option("--field", cfg.field, "Coefficient field")->check(CLI::IsMember({"gfp", "rat"}));
  sub->add_option("--prime", cfg.prime, "Characteristic for --field gfp");
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--out", cfg.out, "Write output to FILE");
}

void add_engine(CLI::App* sub, CommandConfig& cfg) {
  sub->add_option("--order", cfg.order, "Monomial order")->check(CLI::IsMember({"paper", "grevlex", "lex"}));
  sub->add_option("--budget-pairs", cfg.budget_pairs, "Maximum S-pair reductions")->check(CLI::PositiveNumber);
  sub->add_option("--budget-degree", cfg.budget_degree, "Maximum S-pair degree")->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Regular sequences among the entries of a product of generic matrices", "xyreg"};
  app.require_subcommand(1);
  CommandConfig cfg;

  auto* gen = app.add_subcommand("gen", "Emit f_ij, the selection pattern and the augmented sequence");
  add_common(gen, cfg, true);
  add_engine(gen, cfg);

  auto* certify = app.add_subcommand("certify", "Certify the selected entries step by step");
  add_common(certify, cfg, true);
  certify->add_option("--order", cfg.order, "Monomial order")->check(CLI::IsMember({"paper", "grevlex", "lex"}));

  auto* recheck_cmd = app.add_subcommand("recheck", "Re-validate a JSON certificate");
  recheck_cmd->add_option("--input", cfg.input, "Certificate file")->required();
  recheck_cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  recheck_cmd->add_option("--out", cfg.out, "Write output to FILE");

  auto* oracle = app.add_subcommand("oracle", "Decide regularity with a Groebner-basis oracle");
  add_common(oracle, cfg, true);
  add_engine(oracle, cfg);
  oracle->add_option("--method", cfg.method, "Oracle")->check(CLI::IsMember({"hilbert", "colon"}));
  oracle->add_option("--input", cfg.input, "Polynomials, one per line");

  auto* counter = app.add_subcommand("counterexample", "Check the n = 2 zerodivisor relation");
  add_common(counter, cfg, false);
  counter->add_option("--n", cfg.n, "Matrix size; the relation lives at n = 2");

  auto* search = app.add_subcommand("search", "Greedily extend the selected entries");
  add_common(search, cfg, true);
  add_engine(search, cfg);
  search->add_option("--method", cfg.method, "Oracle")->check(CLI::IsMember({"hilbert", "colon"}));

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of polynomials read from a file");
  add_common(gb, cfg, true);
  add_engine(gb, cfg);
  gb->add_option("--input", cfg.input, "Polynomials, one per line")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPropertyHolds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPropertyHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  cfg.field_given = counter->count("--field") > 0;

  const std::map<CLI::App*, std::function<int(const CommandConfig&, std::ostream&)>> commands{
      {gen, cmd_gen}, {certify, cmd_certify}, {recheck_cmd, cmd_recheck}, {oracle, cmd_oracle},
      {counter, cmd_counterexample}, {search, cmd_search}, {gb, cmd_gb}};

  std::ostringstream buffer;
  int code = kUsageError;
  try {
    for (const auto& [sub, run] : commands) {
      if (sub->parsed()) {
        cfg.subcommand = sub->get_name();
        code = run(cfg, buffer);
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const BudgetExceeded& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const std::invalid_argument& e) {  // parse, dimension and context errors
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  if (cfg.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out);
    if (!file) {
      err << "error: cannot write '" << cfg.out << "'\n";
      return kUsageError;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace xyreg
