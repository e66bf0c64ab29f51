#include "chargenus/poly_text.hpp"

#include <algorithm>
#include <cctype>

#include "chargenus/error.hpp"

namespace chargenus::detail {

namespace {

void add_into(SparsePoly& acc, const SparsePoly& p, const Rational& scale) {
  for (const auto& [mono, c] : p) {
    auto& slot = acc[mono];
    slot += c * scale;
    if (slot.is_zero()) acc.erase(mono);
  }
}

SparsePoly multiply(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      std::vector<int> m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      auto& slot = out[m];
      slot += ca * cb;
      if (slot.is_zero()) out.erase(m);
    }
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars, bool allow_negative)
      : text_(text), vars_(vars), allow_negative_(allow_negative) {}

  SparsePoly run() {
    skip_ws();
    if (at_end()) fail("expected a polynomial");
    SparsePoly p = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected character '") + peek() + "'");
    return p;
  }

 private:
  SparsePoly constant(const Rational& c) const {
    SparsePoly p;
    if (!c.is_zero()) p[std::vector<int>(vars_.size(), 0)] = c;
    return p;
  }

  SparsePoly expr() {
    SparsePoly acc;
    Rational sign = 1;
    skip_ws();
    if (peek() == '+' || peek() == '-') {
      sign = get() == '-' ? -1 : 1;
    }
    add_into(acc, term(), sign);
    for (;;) {
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
      sign = get() == '-' ? -1 : 1;
      add_into(acc, term(), sign);
    }
    return acc;
  }

  SparsePoly term() {
    SparsePoly acc = power();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        get();
        acc = multiply(acc, power());
        continue;
      }
      if (peek() != '/') break;
      get();
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("only division by a number is supported");
      BigInt den(digits(), 10);
      if (den == 0) fail("zero denominator");
      acc = multiply(acc, constant(Rational(BigInt(1), den)));
    }
    return acc;
  }

  SparsePoly power() {
    SparsePoly base = primary();
    skip_ws();
    if (peek() != '^') return base;
    get();
    skip_ws();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      get();
    }
    int e = integer_literal();
    if (!negative) {
      SparsePoly r = constant(1);
      for (int i = 0; i < e; ++i) r = multiply(r, base);
      return r;
    }
    if (!allow_negative_) fail("negative exponents are not allowed");
    if (base.size() != 1 || !base.begin()->second.is_one()) fail("negative exponent on a non-monomial");
    std::vector<int> m = base.begin()->first;
    for (int& x : m) x *= -e;
    return SparsePoly{{m, Rational(1)}};
  }

  SparsePoly primary() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      SparsePoly inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      get();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num(digits(), 10);
      BigInt den = 1;
      skip_ws();
      if (peek() == '/') {
        get();
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
        den = BigInt(digits(), 10);
        if (den == 0) fail("zero denominator");
      }
      return constant(Rational(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start_col = column_;
      std::string name;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name += get();
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) {
        throw ParseError("unknown variable '" + name + "'", line_, start_col);
      }
      std::vector<int> m(vars_.size(), 0);
      m[static_cast<std::size_t>(it - vars_.begin())] = 1;
      return SparsePoly{{m, Rational(1)}};
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    return d;
  }

  int integer_literal() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
    std::string d = digits();
    if (d.size() > 6) fail("exponent too large");
    return std::stoi(d);
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) get();
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  bool allow_negative_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

SparsePoly parse_polynomial(std::string_view text, const std::vector<std::string>& variables,
                            bool allow_negative_exponents) {
  return Parser(text, variables, allow_negative_exponents).run();
}

std::string format_term(const Rational& coefficient, const std::string& monomial, bool first,
                        bool spaced) {
  std::string out;
  Rational magnitude = coefficient.sign() < 0 ? -coefficient : coefficient;
  if (first) {
    if (coefficient.sign() < 0) out += "-";
  } else if (spaced) {
    out += coefficient.sign() < 0 ? " - " : " + ";
  } else {
    out += coefficient.sign() < 0 ? "-" : "+";
  }
  if (monomial.empty()) {
    out += magnitude.str();
  } else if (magnitude.is_one()) {
    out += monomial;
  } else {
    out += magnitude.str() + "*" + monomial;
  }
  return out;
}

}  // namespace chargenus::detail
