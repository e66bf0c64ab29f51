#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "chargenus/laurent_poly.hpp"
#include "chargenus/rational.hpp"

namespace chargenus {

/// Polynomial in the two Hodge variables u, v with rational coefficients.
class BiPolyUV {
 public:
  /// (u-exponent, v-exponent)
  using Exponent = std::pair<int, int>;
  using TermMap = std::map<Exponent, Rational>;

  BiPolyUV() = default;
  BiPolyUV(const Rational& constant);  // NOLINT(google-explicit-constructor)
  BiPolyUV(int constant) : BiPolyUV(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  /// Throws DomainError on negative exponents.
  explicit BiPolyUV(TermMap terms);

  static BiPolyUV monomial(const Rational& c, int u_exp, int v_exp);
  static BiPolyUV u() { return monomial(1, 1, 0); }
  static BiPolyUV v() { return monomial(1, 0, 1); }
  /// The product u*v, the image of the Lefschetz class.
  static BiPolyUV uv() { return monomial(1, 1, 1); }
  static BiPolyUV one() { return BiPolyUV(1); }
  /// 1 + t + ... + t^a.
  static BiPolyUV geometric_sum(const BiPolyUV& t, int a);

  /// Parses the polynomial text grammar in the variables u and v.
  static BiPolyUV parse(std::string_view text);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int u_exp, int v_exp) const;
  /// Maximum of u_exp + v_exp over the terms; -1 for zero.
  int total_degree() const;

  BiPolyUV operator-() const;
  BiPolyUV& operator+=(const BiPolyUV& o);
  BiPolyUV& operator-=(const BiPolyUV& o);
  BiPolyUV& operator*=(const Rational& c);
  BiPolyUV& operator*=(const BiPolyUV& o) { return *this = *this * o; }
  friend BiPolyUV operator+(BiPolyUV a, const BiPolyUV& b) { return a += b; }
  friend BiPolyUV operator-(BiPolyUV a, const BiPolyUV& b) { return a -= b; }
  friend BiPolyUV operator*(const BiPolyUV& a, const BiPolyUV& b);
  friend BiPolyUV operator*(BiPolyUV a, const Rational& c) { return a *= c; }
  friend BiPolyUV operator*(const Rational& c, BiPolyUV a) { return a *= c; }
  friend bool operator==(const BiPolyUV& a, const BiPolyUV& b) = default;

  BiPolyUV pow(int exponent) const;

  Rational evaluate(const Rational& u, const Rational& v) const;
  /// Substitutes u and v by univariate Laurent polynomials.
  LaurentPolyY specialize(const LaurentPolyY& u_value, const LaurentPolyY& v_value) const;
  /// p(u, v) -> p(-u, -v); converts between E-polynomial and Hodge characteristic.
  BiPolyUV negate_variables() const;

  /// Exact quotient by `divisor` when it divides this polynomial.
  ///
  /// Runs the division algorithm in lex order (u > v). A single polynomial is
  /// a Groebner basis of the ideal it generates, so the remainder vanishes iff
  /// the division is exact; the quotient is then re-multiplied as a check.
  std::optional<BiPolyUV> divide_exact(const BiPolyUV& divisor) const;

  /// Graded by total degree, then by descending u-exponent:
  /// "1 + u + v + u*v".
  std::string str() const;
  std::string compact_str() const;

  friend std::ostream& operator<<(std::ostream& os, const BiPolyUV& p) { return os << p.str(); }

 private:
  void prune();

  TermMap terms_;
};

}  // namespace chargenus
