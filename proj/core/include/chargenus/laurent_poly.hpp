#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "chargenus/rational.hpp"

namespace chargenus {

/// Univariate Laurent polynomial with rational coefficients.
///
/// The variable is `y` in the genus layer; the same type carries the weight
/// variable `w` and single-variable specializations, which only differ in how
/// they are printed.
class LaurentPolyY {
 public:
  using TermMap = std::map<int, Rational>;

  LaurentPolyY() = default;
  LaurentPolyY(const Rational& constant);  // NOLINT(google-explicit-constructor)
  LaurentPolyY(int constant) : LaurentPolyY(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit LaurentPolyY(TermMap terms);

  /// c * y^k
  static LaurentPolyY monomial(const Rational& c, int k);
  /// The variable itself.
  static LaurentPolyY var() { return monomial(1, 1); }
  /// 1 + t + ... + t^a evaluated at t = `t`.
  static LaurentPolyY geometric_sum(const LaurentPolyY& t, int a);
  static LaurentPolyY one() { return LaurentPolyY(1); }

  /// Parses the polynomial text grammar in the single variable `variable`.
  static LaurentPolyY parse(std::string_view text, std::string_view variable = "y");

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of y^k (zero when absent).
  Rational coefficient(int k) const;
  /// Highest / lowest exponent; throws DomainError on the zero polynomial.
  int max_degree() const;
  int min_degree() const;
  /// True when no negative exponents are present.
  bool is_polynomial() const;

  LaurentPolyY operator-() const;
  LaurentPolyY& operator+=(const LaurentPolyY& o);
  LaurentPolyY& operator-=(const LaurentPolyY& o);
  LaurentPolyY& operator*=(const LaurentPolyY& o);
  LaurentPolyY& operator*=(const Rational& c);
  friend LaurentPolyY operator+(LaurentPolyY a, const LaurentPolyY& b) { return a += b; }
  friend LaurentPolyY operator-(LaurentPolyY a, const LaurentPolyY& b) { return a -= b; }
  friend LaurentPolyY operator*(const LaurentPolyY& a, const LaurentPolyY& b);
  friend LaurentPolyY operator*(LaurentPolyY a, const Rational& c) { return a *= c; }
  friend LaurentPolyY operator*(const Rational& c, LaurentPolyY a) { return a *= c; }
  friend bool operator==(const LaurentPolyY& a, const LaurentPolyY& b) = default;

  /// Non-negative integer power.
  LaurentPolyY pow(int exponent) const;
  /// Multiplies by y^k.
  LaurentPolyY shifted(int k) const;
  /// Exact evaluation; throws DivisionByZero at y = 0 with negative exponents.
  Rational evaluate(const Rational& y) const;
  /// Substitutes the variable by an arbitrary Laurent polynomial (non-negative
  /// exponents only unless `value` is a monomial).
  LaurentPolyY compose(const LaurentPolyY& value) const;

  /// Exact quotient by (1 + y), if the division leaves no remainder.
  std::optional<LaurentPolyY> divide_by_one_plus_y() const;
  /// Exact quotient by `divisor`, if it divides this polynomial in Q[y, 1/y].
  std::optional<LaurentPolyY> divide_exact(const LaurentPolyY& divisor) const;

  /// Ascending exponents, e.g. "1 - 2*y + y^2".
  std::string str(std::string_view variable = "y") const;
  /// Same as str() with no spaces, e.g. "1-2*y+y^2".
  std::string compact_str(std::string_view variable = "y") const;

  friend std::ostream& operator<<(std::ostream& os, const LaurentPolyY& p) { return os << p.str(); }

 private:
  void prune();

  TermMap terms_;
};

}  // namespace chargenus
