#include "chargenus/laurent_poly.hpp"

#include "chargenus/error.hpp"
#include "chargenus/poly_text.hpp"

namespace chargenus {

LaurentPolyY::LaurentPolyY(const Rational& constant) {
  if (!constant.is_zero()) terms_[0] = constant;
}

LaurentPolyY::LaurentPolyY(TermMap terms) : terms_(std::move(terms)) { prune(); }

LaurentPolyY LaurentPolyY::monomial(const Rational& c, int k) {
  LaurentPolyY p;
  if (!c.is_zero()) p.terms_[k] = c;
  return p;
}

LaurentPolyY LaurentPolyY::geometric_sum(const LaurentPolyY& t, int a) {
  LaurentPolyY sum = one();
  LaurentPolyY power = one();
  for (int i = 1; i <= a; ++i) {
    power *= t;
    sum += power;
  }
  return sum;
}

LaurentPolyY LaurentPolyY::parse(std::string_view text, std::string_view variable) {
  auto sparse = detail::parse_polynomial(text, {std::string(variable)}, true);
  TermMap terms;
  for (const auto& [mono, c] : sparse) terms[mono[0]] = c;
  return LaurentPolyY(std::move(terms));
}

void LaurentPolyY::prune() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

Rational LaurentPolyY::coefficient(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPolyY::max_degree() const {
  if (terms_.empty()) throw DomainError("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

int LaurentPolyY::min_degree() const {
  if (terms_.empty()) throw DomainError("degree of the zero polynomial");
  return terms_.begin()->first;
}

bool LaurentPolyY::is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }

LaurentPolyY LaurentPolyY::operator-() const {
  LaurentPolyY r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

LaurentPolyY& LaurentPolyY::operator+=(const LaurentPolyY& o) {
  for (const auto& [k, c] : o.terms_) {
    auto& slot = terms_[k];
    slot += c;
    if (slot.is_zero()) terms_.erase(k);
  }
  return *this;
}

LaurentPolyY& LaurentPolyY::operator-=(const LaurentPolyY& o) {
  for (const auto& [k, c] : o.terms_) {
    auto& slot = terms_[k];
    slot -= c;
    if (slot.is_zero()) terms_.erase(k);
  }
  return *this;
}

LaurentPolyY operator*(const LaurentPolyY& a, const LaurentPolyY& b) {
  LaurentPolyY::TermMap out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out[ka + kb] += ca * cb;
  }
  return LaurentPolyY(std::move(out));
}

LaurentPolyY& LaurentPolyY::operator*=(const LaurentPolyY& o) { return *this = *this * o; }

LaurentPolyY& LaurentPolyY::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

LaurentPolyY LaurentPolyY::pow(int exponent) const {
  if (exponent < 0) throw DomainError("negative power of a Laurent polynomial");
  LaurentPolyY result = one();
  LaurentPolyY base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

LaurentPolyY LaurentPolyY::shifted(int k) const {
  TermMap out;
  for (const auto& [e, c] : terms_) out.emplace(e + k, c);
  return LaurentPolyY(std::move(out));
}

Rational LaurentPolyY::evaluate(const Rational& y) const {
  Rational sum = 0;
  for (const auto& [k, c] : terms_) sum += c * y.pow(k);
  return sum;
}

LaurentPolyY LaurentPolyY::compose(const LaurentPolyY& value) const {
  LaurentPolyY out;
  for (const auto& [k, c] : terms_) {
    if (k >= 0) {
      out += value.pow(k) * c;
    } else {
      if (value.terms_.size() != 1) throw DomainError("negative power of a non-monomial");
      const auto& [e, vc] = *value.terms_.begin();
      out += monomial(c * vc.pow(k), e * k);
    }
  }
  return out;
}

std::optional<LaurentPolyY> LaurentPolyY::divide_by_one_plus_y() const {
  return divide_exact(LaurentPolyY(TermMap{{0, Rational(1)}, {1, Rational(1)}}));
}

std::optional<LaurentPolyY> LaurentPolyY::divide_exact(const LaurentPolyY& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  if (is_zero()) return LaurentPolyY();
  // Long division from the top; Laurent units y^k are absorbed by the shift.
  LaurentPolyY rem = *this;
  LaurentPolyY quotient;
  const int dtop = divisor.max_degree();
  const int dlow = divisor.min_degree();
  const Rational& lead = divisor.terms_.rbegin()->second;
  const int floor = min_degree() - dlow;
  while (!rem.is_zero()) {
    const int shift = rem.max_degree() - dtop;
    if (shift < floor) return std::nullopt;
    LaurentPolyY step = monomial(rem.terms_.rbegin()->second / lead, shift);
    quotient += step;
    rem -= step * divisor;
  }
  return quotient;
}

std::string LaurentPolyY::str(std::string_view variable) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string mono;
    if (k == 1) {
      mono = std::string(variable);
    } else if (k != 0) {
      mono = std::string(variable) + "^" + std::to_string(k);
    }
    out += detail::format_term(c, mono, first, true);
    first = false;
  }
  return out;
}

std::string LaurentPolyY::compact_str(std::string_view variable) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string mono;
    if (k == 1) {
      mono = std::string(variable);
    } else if (k != 0) {
      mono = std::string(variable) + "^" + std::to_string(k);
    }
    out += detail::format_term(c, mono, first, false);
    first = false;
  }
  return out;
}

}  // namespace chargenus
