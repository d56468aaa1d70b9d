#include "hbasis/parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace hbasis {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  Polynomial parse() {
    Polynomial p(vars_.size());
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        sign = (peek() == '-') ? -1.0 : 1.0;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [exps, coeff] = parse_term();
      p.add_term(exps, sign * coeff);
      first = false;
      skip_ws();
    }
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_ + 1); }

  bool starts_number() const {
    return !at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.');
  }

  double parse_number() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) ++pos_;
    if (!at_end() && (peek() == 'e' || peek() == 'E')) {
      std::size_t save = pos_;
      ++pos_;
      if (!at_end() && (peek() == '+' || peek() == '-')) ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        pos_ = save;
      } else {
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
    }
    std::string literal(text_.substr(start, pos_ - start));
    char* end = nullptr;
    double value = std::strtod(literal.c_str(), &end);
    if (end != literal.c_str() + literal.size() || literal == ".") {
      pos_ = start;
      fail("malformed number '" + literal + "'");
    }
    if (!std::isfinite(value)) {
      pos_ = start;
      fail("non-finite coefficient");
    }
    return value;
  }

  std::size_t parse_variable() {
    const std::size_t start = pos_;
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
      fail("expected variable name");
    }
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) return i;
    }
    pos_ = start;
    fail("unknown variable '" + std::string(name) + "'");
  }

  int parse_exponent() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (start == pos_ || ec != std::errc() || value <= 0) {
      pos_ = start;
      fail("expected positive integer exponent");
    }
    return value;
  }

  std::pair<MultiIndex, double> parse_term() {
    MultiIndex exps(vars_.size());
    double coeff = 1.0;
    if (starts_number()) {
      coeff = parse_number();
      skip_ws();
      if (at_end() || peek() != '*') return {exps, coeff};
      ++pos_;
      skip_ws();
    }
    while (true) {
      const std::size_t var = parse_variable();
      int power = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        power = parse_exponent();
        skip_ws();
      }
      exps.set(var, exps[var] + power);
      if (at_end() || peek() != '*') break;
      ++pos_;
      skip_ws();
    }
    return {exps, coeff};
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

std::string format_coefficient(double c) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", c);
  return buf;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
  return Parser(text, vars).parse();
}

std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& vars) {
  if (vars.size() != p.num_vars()) throw std::invalid_argument("variable name count mismatch");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [a, c] : p.terms()) {
    const double mag = std::abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    first = false;
    std::string monomial;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += vars[i];
      if (a[i] > 1) monomial += '^' + std::to_string(a[i]);
    }
    if (monomial.empty()) {
      out += format_coefficient(mag);
    } else if (mag == 1.0) {
      out += monomial;
    } else {
      out += format_coefficient(mag) + '*' + monomial;
    }
  }
  return out;
}

}  // namespace hbasis
