#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chargenus/coeff_y.hpp"
#include "chargenus/graded_ring.hpp"
#include "chargenus/laurent_poly.hpp"

namespace chargenus {

/// Truncated power series sum_k c_k alpha^k with CoeffY coefficients.
struct CharSeries {
  std::vector<CoeffY> coefficients;  ///< size == order + 1

  int order() const { return static_cast<int>(coefficients.size()) - 1; }
  bool normalized() const { return !coefficients.empty() && coefficients[0] == CoeffY(1); }
  const CoeffY& operator[](std::size_t k) const { return coefficients.at(k); }
};

enum class SeriesKind {
  Qy,       ///< alpha(1+y)/(1 - e^{-alpha(1+y)}) - alpha y
  QyTilde,  ///< alpha(1 + y e^{-alpha})/(1 - e^{-alpha}), unnormalized (value 1+y at 0)
  Chern,    ///< 1 + alpha
  Todd,     ///< alpha/(1 - e^{-alpha})
  Lclass,   ///< alpha/tanh(alpha)
  Exp,      ///< e^alpha
};

CharSeries series_builtin(SeriesKind kind, int order);

/// Truncated series arithmetic used by the class engine.
CharSeries series_multiply(const CharSeries& a, const CharSeries& b);
/// Multiplicative inverse; the constant term must be invertible.
CharSeries series_inverse(const CharSeries& a);
/// log of a normalized series.
CharSeries series_log(const CharSeries& a);
/// s(c * alpha) for a scalar c.
CharSeries series_rescale(const CharSeries& a, const CoeffY& c);

/// A vector bundle given by its total Chern class on a variety's ring.
struct BundleData {
  int rank = 0;
  RingElement chern_total;
  std::optional<std::vector<RingElement>> split_roots;

  static BundleData trivial(const SmoothVariety& x, int rank = 1);
  static BundleData line(const SmoothVariety& x, const RingElement& first_chern);
  /// chern_total = prod(1 + root).
  static BundleData from_roots(const SmoothVariety& x, const std::vector<RingElement>& roots);
  static BundleData tangent(const SmoothVariety& x);
  /// Whitney sum.
  BundleData operator+(const BundleData& o) const;
};

/// Newton power sums p_1..p_max of the Chern roots, index 0 holds the rank.
std::vector<RingElement> power_sums(const BundleData& b, int max_degree);

/// Elementary symmetric functions from power sums (inverse Newton identities),
/// e_0 = 1. Used to round-trip the power-sum computation.
std::vector<RingElement> elementary_from_power_sums(const std::vector<RingElement>& p);

/// prod_i s(beta_i) for a normalized series s.
RingElement multiplicative_class(const CharSeries& s, const BundleData& b, const SmoothVariety& x);

/// prod_i s(beta_i) for an arbitrary series with invertible-in-CoeffY constant
/// term c: c^rank times the class of s/c.
RingElement multiplicative_class_unnormalized(const CharSeries& s, const BundleData& b, const SmoothVariety& x);

/// rank * f_0 + sum_k f_k p_k.
RingElement additive_class(const CharSeries& f, const BundleData& b, const SmoothVariety& x);

/// ch with rescaled roots: sum_j e^{beta_j (1+y)}.
RingElement chern_character_1py(const BundleData& b, const SmoothVariety& x);

/// ch(lambda_y T*X) = prod_i (1 + y e^{-alpha_i}).
RingElement ch_lambda_y_cotangent(const SmoothVariety& x);

enum class ClassVariant { Normalized, Unnormalized };

/// T_y*(TX) (normalized) or td(TX) ch(lambda_y T*X) (unnormalized).
RingElement hirzebruch_class(const SmoothVariety& x, ClassVariant variant);

/// Multiplies the component of complex dimension j (= dim X - degree) by (1+y)^{-j}.
RingElement twist_td1py(const RingElement& a, const SmoothVariety& x);

/// chi_y(X, E) via generalized Hirzebruch-Riemann-Roch. E defaults to O_X.
LaurentPolyY chi_y(const SmoothVariety& x, const std::optional<BundleData>& e = std::nullopt);

/// Genus of a smooth hypersurface with class `divisor`:
/// integral of s-class(T ambient) * s(H)^{-1} * H.
CoeffY genus_hypersurface(const CharSeries& s, const SmoothVariety& ambient, const RingElement& divisor);

/// chi_y of a smooth hypersurface with class `divisor`.
LaurentPolyY chi_y_hypersurface(const SmoothVariety& ambient, const RingElement& divisor);

/// chi_y(X') = chi_y(X) + chi_y(Y) ((-y) + ... + (-y)^r) for a blow-up along
/// Y of codimension r + 1.
LaurentPolyY blowup_chi_y(const LaurentPolyY& chi_x, const LaurentPolyY& chi_y_center, int codim);

/// phi(P^n) for n = 0..n_max under the genus of a normalized series.
std::vector<CoeffY> genus_table(const CharSeries& s, int n_max);

/// Integral of the multiplicative class of `s` on TX.
CoeffY genus(const CharSeries& s, const SmoothVariety& x);

}  // namespace chargenus
