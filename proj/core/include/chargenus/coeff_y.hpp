#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "chargenus/laurent_poly.hpp"

namespace chargenus {

/// Element of Q[y, 1/y][(1+y)^{-1}] stored as poly / (1+y)^k.
///
/// Normal form: k == 0, or poly(-1) != 0. Two values are equal iff their
/// normal forms coincide.
class CoeffY {
 public:
  CoeffY() = default;
  CoeffY(const Rational& c) : poly_(c) {}  // NOLINT(google-explicit-constructor)
  CoeffY(int c) : poly_(c) {}  // NOLINT(google-explicit-constructor)
  CoeffY(LaurentPolyY poly) : poly_(std::move(poly)) {}  // NOLINT(google-explicit-constructor)
  /// poly / (1+y)^k, reduced to normal form. Throws DomainError for k < 0.
  CoeffY(LaurentPolyY poly, int one_plus_y_power);

  static CoeffY y() { return CoeffY(LaurentPolyY::var()); }
  /// (1+y)^e for any integer e.
  static CoeffY one_plus_y_pow(int e);

  const LaurentPolyY& poly() const { return poly_; }
  int one_plus_y_power() const { return k_; }

  bool is_zero() const { return poly_.is_zero(); }
  /// The value as a Laurent polynomial when no (1+y) denominator remains.
  std::optional<LaurentPolyY> as_polynomial() const;
  /// Exact evaluation; throws DivisionByZero at y = -1 when k > 0.
  Rational evaluate(const Rational& y) const;

  CoeffY operator-() const;
  CoeffY& operator+=(const CoeffY& o);
  CoeffY& operator-=(const CoeffY& o);
  CoeffY& operator*=(const CoeffY& o);
  friend CoeffY operator+(CoeffY a, const CoeffY& b) { return a += b; }
  friend CoeffY operator-(CoeffY a, const CoeffY& b) { return a -= b; }
  friend CoeffY operator*(CoeffY a, const CoeffY& b) { return a *= b; }
  friend bool operator==(const CoeffY& a, const CoeffY& b) = default;

  /// Multiplies by (1+y)^e, e of any sign.
  CoeffY times_one_plus_y_pow(int e) const;
  CoeffY pow(int exponent) const;

  /// "1 - y", "(1 - y)/(1 + y)^2".
  std::string str() const;
  /// No spaces; multi-term numerators are parenthesized only when `wrap` is set.
  std::string compact_str(bool wrap = false) const;

  friend std::ostream& operator<<(std::ostream& os, const CoeffY& c) { return os << c.str(); }

 private:
  void normalize();

  LaurentPolyY poly_;
  int k_ = 0;
};

/// Free-function form of CoeffY normalization.
CoeffY coeffy_normalize(const LaurentPolyY& poly, int one_plus_y_power);

}  // namespace chargenus
