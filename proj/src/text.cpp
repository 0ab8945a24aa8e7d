#include "xyreg/text.hpp"

#include <cctype>
#include <vector>

#include "xyreg/errors.hpp"

namespace xyreg {

namespace {

class Parser {
public:
  Parser(std::string_view text, const VariableTable& table, Field field)
      : text_(text), table_(table), field_(field) {}

  std::vector<Term> polynomial() {
    std::vector<Term> terms;
    bool negative = false;
    if (peek() == '-') {
      ++pos_;
      negative = true;
    } else if (peek() == '+') {
      ++pos_;
    }
    for (;;) {
      Term t = term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      const char c = peek();
      if (c == '\0') break;
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      negative = c == '-';
    }
    return terms;
  }

  Monomial monomial_only() {
    if (peek() == '1') {
      ++pos_;
      if (peek() != '\0') fail("unexpected trailing input");
      return Monomial(table_.nvars());
    }
    Monomial m = factor();
    while (peek() == '*') {
      ++pos_;
      m = m * factor();
    }
    if (peek() != '\0') fail("unexpected trailing input");
    return m;
  }

private:
  Term term() {
    Scalar coeff = field_.one();
    Monomial mono(table_.nvars());
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = coefficient();
      if (peek() != '*') return Term{coeff, mono};
      ++pos_;
    }
    mono = mono * factor();
    while (peek() == '*') {
      ++pos_;
      mono = mono * factor();
    }
    return Term{coeff, mono};
  }

  Scalar coefficient() {
    const mpz_class num = integer();
    if (peek() == '/') {
      ++pos_;
      const std::size_t at = pos_;
      const mpz_class den = integer();
      if (den == 0) fail_at("zero denominator", at);
      return field_.from_ratio(num, den);
    }
    return field_.from_ratio(num, 1);
  }

  Monomial factor() {
    const char c = peek();
    if (c != 'x' && c != 'y') fail("expected variable 'x[i,j]' or 'y[i,j]'");
    ++pos_;
    expect('[');
    const std::size_t at = pos_;
    const mpz_class i = integer();
    expect(',');
    const mpz_class j = integer();
    expect(']');
    if (i < 1 || j < 1 || i > static_cast<unsigned long>(table_.n()) || j > static_cast<unsigned long>(table_.n())) {
      throw DomainError("variable index [" + i.get_str() + "," + j.get_str() + "] out of range 1.." +
                        std::to_string(table_.n()) + " at position " + std::to_string(at));
    }
    Monomial::Exponent power = 1;
    if (peek() == '^') {
      ++pos_;
      const std::size_t exp_at = pos_;
      const mpz_class e = integer();
      if (!e.fits_uint_p() || e.get_ui() > 0xFFFFFFu) fail_at("exponent too large", exp_at);
      power = static_cast<Monomial::Exponent>(e.get_ui());
    }
    return Monomial::variable(table_.nvars(), table_.slot(c == 'x' ? MatrixVar::X : MatrixVar::Y, i.get_ui(), j.get_ui()),
                              power);
  }

  mpz_class integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) { fail_at(what, pos_); }
  [[noreturn]] static void fail_at(const std::string& what, std::size_t at) { throw ParseError(what, at); }

  std::string_view text_;
  const VariableTable& table_;
  Field field_;
  std::size_t pos_ = 0;
};

void check_table(std::size_t nvars, const VariableTable& table) {
  if (nvars < table.nvars()) throw DimensionError("ring is smaller than the variable table");
}

}  // namespace

Polynomial parse_poly(std::string_view text, const VariableTable& table, Field field, OrderPtr order) {
  if (order->nvars() != table.nvars()) throw DimensionError("order does not match the variable table");
  Parser parser(text, table, field);
  return Polynomial::from_terms(field, std::move(order), parser.polynomial());
}

Monomial parse_monomial(std::string_view text, const VariableTable& table) {
  return Parser(text, table, Field::rationals()).monomial_only();
}

std::string format_monomial(const Monomial& m, const VariableTable& table) {
  check_table(m.size(), table);
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t slot = 0; slot < m.size(); ++slot) {
    if (m[slot] == 0) continue;
    if (!out.empty()) out += '*';
    out += table.name(slot);
    if (m[slot] > 1) out += "^" + std::to_string(m[slot]);
  }
  return out;
}

std::string format_poly(const Polynomial& p, const VariableTable& table) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const Term& t : p.terms()) {
    const bool negative = t.coeff.prints_negative();
    const Scalar magnitude = negative ? -t.coeff : t.coeff;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      out += magnitude.to_string();
      continue;
    }
    if (!magnitude.is_one()) out += magnitude.to_string() + "*";
    out += format_monomial(t.mono, table);
  }
  return out;
}

}  // namespace xyreg
