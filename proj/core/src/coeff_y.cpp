#include "chargenus/coeff_y.hpp"

#include "chargenus/error.hpp"

namespace chargenus {

namespace {

const LaurentPolyY& one_plus_y() {
  static const LaurentPolyY p(LaurentPolyY::TermMap{{0, Rational(1)}, {1, Rational(1)}});
  return p;
}

}  // namespace

CoeffY::CoeffY(LaurentPolyY poly, int one_plus_y_power) : poly_(std::move(poly)), k_(one_plus_y_power) {
  if (k_ < 0) throw DomainError("negative (1+y) denominator power");
  normalize();
}

CoeffY coeffy_normalize(const LaurentPolyY& poly, int one_plus_y_power) {
  return CoeffY(poly, one_plus_y_power);
}

CoeffY CoeffY::one_plus_y_pow(int e) {
  if (e >= 0) return CoeffY(one_plus_y().pow(e));
  return CoeffY(LaurentPolyY::one(), -e);
}

void CoeffY::normalize() {
  if (poly_.is_zero()) {
    k_ = 0;
    return;
  }
  while (k_ > 0) {
    auto q = poly_.divide_by_one_plus_y();
    if (!q) break;
    poly_ = std::move(*q);
    --k_;
  }
}

std::optional<LaurentPolyY> CoeffY::as_polynomial() const {
  if (k_ != 0) return std::nullopt;
  return poly_;
}

Rational CoeffY::evaluate(const Rational& y) const {
  Rational num = poly_.evaluate(y);
  if (k_ == 0) return num;
  return num / (Rational(1) + y).pow(k_);
}

CoeffY CoeffY::operator-() const {
  CoeffY r = *this;
  r.poly_ = -r.poly_;
  return r;
}

CoeffY& CoeffY::operator+=(const CoeffY& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int k = std::max(k_, o.k_);
  poly_ = poly_ * one_plus_y().pow(k - k_) + o.poly_ * one_plus_y().pow(k - o.k_);
  k_ = k;
  normalize();
  return *this;
}

CoeffY& CoeffY::operator-=(const CoeffY& o) { return *this += -o; }

CoeffY& CoeffY::operator*=(const CoeffY& o) {
  poly_ *= o.poly_;
  k_ += o.k_;
  normalize();
  return *this;
}

CoeffY CoeffY::times_one_plus_y_pow(int e) const {
  if (is_zero()) return *this;
  CoeffY r = *this;
  if (e >= 0) {
    // Cancel against the denominator first, then grow the numerator.
    const int cancel = std::min(e, r.k_);
    r.k_ -= cancel;
    r.poly_ *= one_plus_y().pow(e - cancel);
  } else {
    r.k_ += -e;
  }
  r.normalize();
  return r;
}

CoeffY CoeffY::pow(int exponent) const {
  if (exponent < 0) throw DomainError("negative power of a CoeffY value");
  return CoeffY(poly_.pow(exponent), k_ * exponent);
}

std::string CoeffY::str() const {
  if (k_ == 0) return poly_.str();
  std::string den = k_ == 1 ? "(1 + y)" : "(1 + y)^" + std::to_string(k_);
  return "(" + poly_.str() + ")/" + den;
}

std::string CoeffY::compact_str(bool wrap) const {
  std::string num = poly_.compact_str();
  const bool multi = poly_.terms().size() > 1;
  if (k_ == 0) return (wrap && multi) ? "(" + num + ")" : num;
  std::string den = k_ == 1 ? "(1+y)" : "(1+y)^" + std::to_string(k_);
  std::string q = (multi ? "(" + num + ")" : num) + "/" + den;
  return wrap ? "(" + q + ")" : q;
}

}  // namespace chargenus
