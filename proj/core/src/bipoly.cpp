#include "chargenus/bipoly.hpp"

#include <algorithm>
#include <vector>

#include "chargenus/error.hpp"
#include "chargenus/poly_text.hpp"

namespace chargenus {

BiPolyUV::BiPolyUV(const Rational& constant) {
  if (!constant.is_zero()) terms_[{0, 0}] = constant;
}

BiPolyUV::BiPolyUV(TermMap terms) : terms_(std::move(terms)) {
  for (const auto& [e, c] : terms_) {
    if (e.first < 0 || e.second < 0) throw DomainError("negative exponent in a (u,v) polynomial");
  }
  prune();
}

BiPolyUV BiPolyUV::monomial(const Rational& c, int u_exp, int v_exp) {
  if (u_exp < 0 || v_exp < 0) throw DomainError("negative exponent in a (u,v) polynomial");
  BiPolyUV p;
  if (!c.is_zero()) p.terms_[{u_exp, v_exp}] = c;
  return p;
}

BiPolyUV BiPolyUV::geometric_sum(const BiPolyUV& t, int a) {
  BiPolyUV sum = one();
  BiPolyUV power = one();
  for (int i = 1; i <= a; ++i) {
    power = power * t;
    sum += power;
  }
  return sum;
}

BiPolyUV BiPolyUV::parse(std::string_view text) {
  auto sparse = detail::parse_polynomial(text, {"u", "v"});
  TermMap terms;
  for (const auto& [mono, c] : sparse) terms[{mono[0], mono[1]}] = c;
  return BiPolyUV(std::move(terms));
}

void BiPolyUV::prune() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

Rational BiPolyUV::coefficient(int u_exp, int v_exp) const {
  auto it = terms_.find({u_exp, v_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BiPolyUV::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

BiPolyUV BiPolyUV::operator-() const {
  BiPolyUV r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

BiPolyUV& BiPolyUV::operator+=(const BiPolyUV& o) {
  for (const auto& [e, c] : o.terms_) {
    auto& slot = terms_[e];
    slot += c;
    if (slot.is_zero()) terms_.erase(e);
  }
  return *this;
}

BiPolyUV& BiPolyUV::operator-=(const BiPolyUV& o) {
  for (const auto& [e, c] : o.terms_) {
    auto& slot = terms_[e];
    slot -= c;
    if (slot.is_zero()) terms_.erase(e);
  }
  return *this;
}

BiPolyUV& BiPolyUV::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

BiPolyUV operator*(const BiPolyUV& a, const BiPolyUV& b) {
  BiPolyUV::TermMap out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  }
  return BiPolyUV(std::move(out));
}

BiPolyUV BiPolyUV::pow(int exponent) const {
  if (exponent < 0) throw DomainError("negative power of a (u,v) polynomial");
  BiPolyUV result = one();
  for (int i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

Rational BiPolyUV::evaluate(const Rational& u, const Rational& v) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += c * u.pow(e.first) * v.pow(e.second);
  return sum;
}

LaurentPolyY BiPolyUV::specialize(const LaurentPolyY& u_value, const LaurentPolyY& v_value) const {
  LaurentPolyY out;
  for (const auto& [e, c] : terms_) out += u_value.pow(e.first) * v_value.pow(e.second) * c;
  return out;
}

BiPolyUV BiPolyUV::negate_variables() const {
  BiPolyUV r = *this;
  for (auto& [e, c] : r.terms_) {
    if ((e.first + e.second) % 2 != 0) c = -c;
  }
  return r;
}

std::optional<BiPolyUV> BiPolyUV::divide_exact(const BiPolyUV& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  if (is_zero()) return BiPolyUV();
  // Lex order with u > v is exactly std::map order on (u_exp, v_exp).
  const auto& [lead_exp, lead_coeff] = *divisor.terms_.rbegin();
  BiPolyUV rem = *this;
  BiPolyUV quotient;
  while (!rem.is_zero()) {
    const auto& [e, c] = *rem.terms_.rbegin();
    if (e.first < lead_exp.first || e.second < lead_exp.second) return std::nullopt;
    BiPolyUV step = monomial(c / lead_coeff, e.first - lead_exp.first, e.second - lead_exp.second);
    quotient += step;
    rem -= step * divisor;
  }
  if (!(quotient * divisor == *this)) return std::nullopt;
  return quotient;
}

namespace {

std::vector<std::pair<BiPolyUV::Exponent, Rational>> display_order(const BiPolyUV::TermMap& terms) {
  std::vector<std::pair<BiPolyUV::Exponent, Rational>> v(terms.begin(), terms.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second;
    const int db = b.first.first + b.first.second;
    if (da != db) return da < db;
    return a.first.first > b.first.first;
  });
  return v;
}

std::string monomial_text(int a, int b) {
  std::string out;
  auto power = [](const char* var, int e) {
    return e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e);
  };
  if (a > 0) out += power("u", a);
  if (b > 0) out += (out.empty() ? "" : "*") + power("v", b);
  return out;
}

}  // namespace

std::string BiPolyUV::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : display_order(terms_)) {
    out += detail::format_term(c, monomial_text(e.first, e.second), first, true);
    first = false;
  }
  return out;
}

std::string BiPolyUV::compact_str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : display_order(terms_)) {
    out += detail::format_term(c, monomial_text(e.first, e.second), first, false);
    first = false;
  }
  return out;
}

}  // namespace chargenus
