#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chargenus/bipoly.hpp"
#include "chargenus/error.hpp"
#include "chargenus/laurent_poly.hpp"

namespace chargenus {

/// The geometric sum g_a(t) = 1 + t + ... + t^a, identified by a + 1.
///
/// (t - 1) * g_a(t) = t^{a+1} - 1. The identity factor g_0 is never stored.
struct GeomFactor {
  int exponent = 2;  ///< a + 1, at least 2 when stored

  int top_power() const { return exponent - 1; }

  template <class Poly>
  Poly expand(const Poly& t) const {
    return Poly::geometric_sum(t, exponent - 1);
  }

  friend auto operator<=>(const GeomFactor&, const GeomFactor&) = default;
};

/// Quotient numerator / prod g_{a_i}(t) where t is a fixed polynomial (u*v,
/// -y, y, ...). Poly is BiPolyUV or LaurentPolyY.
///
/// Equality is decided by cross-multiplication; fractions are never reduced to
/// a canonical form.
template <class Poly>
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(Poly numerator, std::vector<GeomFactor> factors, Poly t)
      : numerator_(std::move(numerator)), factors_(std::move(factors)), t_(std::move(t)) {
    std::erase_if(factors_, [](const GeomFactor& f) { return f.exponent <= 1; });
    std::sort(factors_.begin(), factors_.end());
  }
  /// Polynomial viewed as a fraction with empty denominator.
  RatFunc(Poly numerator, Poly t) : numerator_(std::move(numerator)), t_(std::move(t)) {}

  const Poly& numerator() const { return numerator_; }
  const std::vector<GeomFactor>& denominator_factors() const { return factors_; }
  const Poly& variable() const { return t_; }

  Poly expanded_denominator() const {
    Poly d = Poly::one();
    for (const auto& f : factors_) d = d * f.expand(t_);
    return d;
  }

  RatFunc operator*(const RatFunc& o) const {
    check_same_variable(o);
    std::vector<GeomFactor> fs = factors_;
    fs.insert(fs.end(), o.factors_.begin(), o.factors_.end());
    return RatFunc(numerator_ * o.numerator_, std::move(fs), t_);
  }

  /// Sum over the least common multiple of the two factor multisets.
  RatFunc operator+(const RatFunc& o) const {
    check_same_variable(o);
    std::map<GeomFactor, int> mine, theirs;
    for (const auto& f : factors_) ++mine[f];
    for (const auto& f : o.factors_) ++theirs[f];
    std::vector<GeomFactor> common;
    Poly left = numerator_;
    Poly right = o.numerator_;
    std::map<GeomFactor, int> all = mine;
    for (const auto& [f, n] : theirs) all[f] = std::max(all[f], n);
    for (const auto& [f, n] : all) {
      for (int i = 0; i < n; ++i) common.push_back(f);
      for (int i = mine[f]; i < n; ++i) left = left * f.expand(t_);
      for (int i = theirs[f]; i < n; ++i) right = right * f.expand(t_);
    }
    return RatFunc(left + right, std::move(common), t_);
  }

  RatFunc operator-() const { return RatFunc(-numerator_, factors_, t_); }
  RatFunc operator-(const RatFunc& o) const { return *this + (-o); }

  /// f == g iff num(f) * den(g) == num(g) * den(f).
  friend bool ratfunc_equal(const RatFunc& f, const RatFunc& g) {
    f.check_same_variable(g);
    return f.numerator_ * g.expanded_denominator() == g.numerator_ * f.expanded_denominator();
  }

  /// The polynomial equal to this fraction, if the denominator divides the numerator.
  std::optional<Poly> to_polynomial() const {
    if (factors_.empty()) return numerator_;
    return numerator_.divide_exact(expanded_denominator());
  }

  std::string str() const {
    if (factors_.empty()) return numerator_.str();
    std::string out = "(" + numerator_.str() + ") / (";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) out += ")*(";
      out += factors_[i].expand(t_).str();
    }
    return out + ")";
  }

 private:
  void check_same_variable(const RatFunc& o) const {
    if (!(t_ == o.t_)) throw DomainError("rational functions use different denominator variables");
  }

  Poly numerator_;
  std::vector<GeomFactor> factors_;
  Poly t_;
};

template <class Poly>
std::optional<Poly> ratfunc_to_polynomial(const RatFunc<Poly>& f) {
  return f.to_polynomial();
}

using RatFuncUV = RatFunc<BiPolyUV>;
using RatFuncY = RatFunc<LaurentPolyY>;

}  // namespace chargenus
