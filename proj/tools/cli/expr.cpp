#include "expr.hpp"

#include <cctype>
#include <regex>

#include "chargenus/error.hpp"

namespace chargenus::cli {

namespace {

constexpr int kIntLimit = 1000000;

bool is_projective_name(std::string_view name) {
  static const std::regex re("P[0-9]+");
  return std::regex_match(name.begin(), name.end(), re);
}

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

class Parser {
 public:
  Parser(std::string_view text, const AtomRegistry& registry) : text_(text), registry_(registry) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip_ws();
    if (!at_end()) fail_expected("'*' or end of input");
    return e;
  }

 private:
  ExprPtr expr() {
    ExprPtr acc = term();
    for (;;) {
      skip_ws();
      if (peek() != '*') return acc;
      get();
      Expr p;
      p.kind = Expr::Kind::Product;
      p.left = acc;
      p.right = term();
      acc = make(std::move(p));
    }
  }

  ExprPtr term() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      get();
      ExprPtr inner = expr();
      expect(')', "'*' or ')'");
      return inner;
    }
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') {
      fail_expected("'P(', 'A(', 'L', 'pt', an atom name, 'Pbundle(', 'Hyp(', 'scissor(' or '('");
    }
    const std::size_t line = line_, column = column_;
    std::string word;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') word += get();
    skip_ws();
    const bool call = peek() == '(';

    Expr e;
    if (word == "P" || word == "A") {
      if (!call) fail_expected("'('");
      get();
      e.kind = word == "P" ? Expr::Kind::Proj : Expr::Kind::Affine;
      e.n = integer(false);
      expect(')', "')'");
      return make(std::move(e));
    }
    if (word == "Pbundle" || word == "Hyp") {
      if (!call) fail_expected("'('");
      get();
      e.kind = word == "Pbundle" ? Expr::Kind::Bundle : Expr::Kind::Hyp;
      e.left = expr();
      expect(';', "'*' or ';'");
      e.integers.push_back(integer(true));
      for (;;) {
        skip_ws();
        if (peek() != ',') break;
        get();
        e.integers.push_back(integer(true));
      }
      expect(')', "',' or ')'");
      return make(std::move(e));
    }
    if (word == "scissor") {
      if (!call) fail_expected("'('");
      get();
      e.kind = Expr::Kind::Scissor;
      e.left = expr();
      expect(',', "'*' or ','");
      e.right = expr();
      expect(')', "'*' or ')'");
      return make(std::move(e));
    }
    if (call) throw ParseError("'" + word + "' is not a constructor", line, column);
    if (word == "L") {
      e.kind = Expr::Kind::Lefschetz;
    } else if (word == "pt") {
      e.kind = Expr::Kind::Point;
    } else {
      if (!is_projective_name(word) && !registry_.find(word)) {
        throw ParseError("unknown atom '" + word + "'", line, column);
      }
      e.kind = Expr::Kind::Atom;
      e.name = word;
    }
    return make(std::move(e));
  }

  int integer(bool allow_sign) {
    skip_ws();
    bool negative = false;
    if (allow_sign && (peek() == '-' || peek() == '+')) negative = get() == '-';
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail_expected(allow_sign ? "an integer" : "a non-negative integer");
    const std::size_t line = line_, column = column_;
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
    if (digits.size() > 7 || std::stol(digits) > kIntLimit) throw ParseError("integer too large", line, column);
    const int v = std::stoi(digits);
    return negative ? -v : v;
  }

  void expect(char c, const char* expected) {
    skip_ws();
    if (peek() != c) fail_expected(expected);
    get();
  }

  [[noreturn]] void fail_expected(const std::string& expected) const {
    const std::string found = at_end() ? "end of input" : std::string("'") + peek() + "'";
    throw ParseError("expected " + expected + " but found " + found, line_, column_);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() {
    const char c = text_[pos_++];
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
  const AtomRegistry& registry_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  auto same = [](const ExprPtr& x, const ExprPtr& y) { return (!x && !y) || (x && y && *x == *y); };
  return a.kind == b.kind && a.n == b.n && a.name == b.name && a.integers == b.integers && same(a.left, b.left) &&
         same(a.right, b.right);
}

ExprPtr parse_expr(std::string_view text, const AtomRegistry& registry) { return Parser(text, registry).run(); }

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Proj:
      return "P(" + std::to_string(e.n) + ")";
    case Expr::Kind::Affine:
      return "A(" + std::to_string(e.n) + ")";
    case Expr::Kind::Lefschetz:
      return "L";
    case Expr::Kind::Point:
      return "pt";
    case Expr::Kind::Atom:
      return e.name;
    case Expr::Kind::Product: {
      std::string r = print_expr(*e.right);
      if (e.right->kind == Expr::Kind::Product) r = "(" + r + ")";
      return print_expr(*e.left) + "*" + r;
    }
    case Expr::Kind::Bundle:
      return "Pbundle(" + print_expr(*e.left) + "; " + join_ints(e.integers) + ")";
    case Expr::Kind::Hyp:
      return "Hyp(" + print_expr(*e.left) + "; " + join_ints(e.integers) + ")";
    case Expr::Kind::Scissor:
      return "scissor(" + print_expr(*e.left) + ", " + print_expr(*e.right) + ")";
  }
  return {};
}

bool contains_kind(const Expr& e, Expr::Kind kind) {
  if (e.kind == kind) return true;
  return (e.left && contains_kind(*e.left, kind)) || (e.right && contains_kind(*e.right, kind));
}

}  // namespace chargenus::cli
