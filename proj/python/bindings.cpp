#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "xyreg/certificate.hpp"
#include "xyreg/errors.hpp"
#include "xyreg/groebner.hpp"
#include "xyreg/hilbert.hpp"
#include "xyreg/oracle.hpp"
#include "xyreg/pattern.hpp"
#include "xyreg/serialize.hpp"
#include "xyreg/text.hpp"

namespace py = pybind11;
using namespace xyreg;

namespace {

BuchbergerOptions budget_options(std::optional<std::size_t> max_pairs, std::optional<std::uint64_t> max_degree) {
  BuchbergerOptions o;
  o.budget.max_pairs = max_pairs;
  o.budget.max_degree = max_degree;
  return o;
}

OracleMethod method_from_name(const std::string& name) {
  if (name == "hilbert") return OracleMethod::Hilbert;
  if (name == "colon") return OracleMethod::Colon;
  throw std::invalid_argument("unknown oracle method '" + name + "'");
}

GenericProduct make_product(std::size_t n, const std::string& field, const std::string& order) {
  return GenericProduct(n, parse_field_name(field), order_from_name(order, n));
}

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, const GenericProduct& p) {
  std::vector<Polynomial> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(parse_poly(t, p.table(), p.field(), p.order()));
  return out;
}

std::vector<Polynomial> polys_of(const std::vector<LabeledPolynomial>& seq) {
  std::vector<Polynomial> out;
  for (const LabeledPolynomial& l : seq) out.push_back(l.poly);
  return out;
}

py::list labeled(const std::vector<LabeledPolynomial>& seq, const VariableTable& table) {
  py::list out;
  for (const LabeledPolynomial& l : seq) out.append(py::make_tuple(l.label, format_poly(l.poly, table)));
  return out;
}

py::dict relation_dict(const RelationCheck& r, const VariableTable& table) {
  py::dict d;
  d["relation"] = r.relation;
  d["residue"] = format_poly(r.residue, table);
  d["cofactor"] = r.cofactor;
  d["cofactor_outside_prefix"] = r.cofactor_outside_prefix;
  d["multiple_inside_prefix"] = r.multiple_inside_prefix;
  d["holds"] = r.holds();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Regular sequences among the entries of a product of generic matrices";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def("entry_f", [](std::size_t n, std::size_t i, std::size_t j) { return format_poly(entry_f(n, i, j), VariableTable(n)); },
        py::arg("n"), py::arg("i"), py::arg("j"));
  m.def("k_value", &k_value, py::arg("n"), py::arg("t"));
  m.def("pattern_rows", &pattern_rows, py::arg("n"), py::arg("t"));
  m.def(
      "pattern_json",
      [](std::size_t n) { return pattern_to_json(pattern_spec(n), GenericProduct(n)).dump(); }, py::arg("n"));
  m.def(
      "build_F", [](std::size_t n) { const GenericProduct p(n); return labeled(build_F(p), p.table()); }, py::arg("n"));
  m.def(
      "build_Ftilde", [](std::size_t n) { const GenericProduct p(n); return labeled(build_Ftilde(p), p.table()); },
      py::arg("n"));

  m.def(
      "certify_json",
      [](std::size_t n, const std::string& field) {
        return certificate_to_json(certify_theorem(n, parse_field_name(field))).dump();
      },
      py::arg("n"), py::arg("field") = "gf(32003)");
  m.def(
      "recheck_json",
      [](const std::string& text) {
        const RegularityCertificate cert = certificate_from_json(nlohmann::ordered_json::parse(text));
        const Verdict v = recheck(cert);
        return py::make_tuple(v.certified, v.detail);
      },
      py::arg("certificate"));

  m.def(
      "sequence_oracle",
      [](std::size_t n, std::optional<std::vector<std::string>> polys, const std::string& method, const std::string& field,
         std::optional<std::size_t> budget_pairs, std::optional<std::uint64_t> budget_degree) {
        const GenericProduct p = make_product(n, field, "paper");
        const std::vector<Polynomial> seq = polys ? parse_all(*polys, p) : polys_of(build_F(p));
        const SequenceVerdict r = sequence_oracle(seq, method_from_name(method), budget_options(budget_pairs, budget_degree));
        py::dict d;
        d["verdict"] = to_string(r.verdict);
        d["first_failure"] = r.first_failure ? py::cast(*r.first_failure) : py::none();
        d["message"] = r.message;
        if (r.hilbert) {
          d["numerator"] = r.hilbert->numerator;
          d["nvars"] = r.hilbert->nvars;
          d["expected_numerator"] = *r.expected_numerator;
          d["series"] = r.hilbert->series(6);
        }
        return d;
      },
      py::arg("n"), py::arg("polys") = py::none(), py::arg("method") = "hilbert", py::arg("field") = "gf(32003)",
      py::arg("budget_pairs") = py::none(), py::arg("budget_degree") = py::none());

  m.def(
      "groebner_basis",
      [](std::size_t n, const std::vector<std::string>& polys, const std::string& order, const std::string& field,
         std::optional<std::size_t> budget_pairs) {
        const GenericProduct p = make_product(n, field, order);
        const GroebnerBasis gb = buchberger(parse_all(polys, p), budget_options(budget_pairs, std::nullopt));
        std::vector<std::string> out;
        for (const Polynomial& g : gb.generators()) out.push_back(format_poly(g, p.table()));
        return out;
      },
      py::arg("n"), py::arg("polys"), py::arg("order") = "grevlex", py::arg("field") = "gf(32003)",
      py::arg("budget_pairs") = py::none());

  m.def(
      "hilbert_numerator",
      [](const std::vector<std::vector<Monomial::Exponent>>& gens, std::size_t nvars) {
        std::vector<Monomial> monos;
        for (const auto& e : gens) {
          if (e.size() != nvars) throw DimensionError("exponent vector length differs from nvars");
          monos.emplace_back(e);
        }
        return hilbert_numerator(monos, nvars).numerator;
      },
      py::arg("generators"), py::arg("nvars"));

  m.def(
      "counterexample",
      [](const std::string& field) {
        const CounterexampleReport r = counterexample_n2(parse_field_name(field));
        const VariableTable table(2);
        py::dict d;
        d["field"] = r.field.name();
        d["quoted"] = relation_dict(r.quoted, table);
        d["adjugate"] = relation_dict(r.adjugate, table);
        d["quoted_checks_pass"] = r.quoted_checks_pass();
        d["zerodivisor_established"] = r.zerodivisor_established();
        return d;
      },
      py::arg("field") = "rat");
}
