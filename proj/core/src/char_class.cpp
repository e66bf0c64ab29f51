#include "chargenus/char_class.hpp"

#include "chargenus/error.hpp"

namespace chargenus {

namespace {

CharSeries zero_series(int order) { return CharSeries{std::vector<CoeffY>(static_cast<std::size_t>(order) + 1)}; }

CharSeries truncate(const CharSeries& s, int order) {
  if (s.order() < order) {
    throw DomainError("series of order " + std::to_string(s.order()) + " cannot be used to order " +
                      std::to_string(order));
  }
  return CharSeries{std::vector<CoeffY>(s.coefficients.begin(), s.coefficients.begin() + order + 1)};
}

// Inverse of a CoeffY of the form c * y^s * (1+y)^m.
CoeffY invert_unit(const CoeffY& c) {
  if (c.is_zero()) throw DivisionByZero();
  LaurentPolyY p = c.poly();
  int m = 0;
  while (p.terms().size() > 1) {
    auto q = p.divide_by_one_plus_y();
    if (!q) throw DomainError("series constant term is not a unit: " + c.str());
    p = std::move(*q);
    ++m;
  }
  const auto& [s, coeff] = *p.terms().begin();
  CoeffY inv(LaurentPolyY::monomial(Rational(1) / coeff, -s));
  return inv.times_one_plus_y_pow(c.one_plus_y_power() - m);
}

}  // namespace

CharSeries series_multiply(const CharSeries& a, const CharSeries& b) {
  const int order = std::min(a.order(), b.order());
  CharSeries out = zero_series(order);
  for (int i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) out.coefficients[i + j] += a[i] * b[j];
  }
  return out;
}

CharSeries series_inverse(const CharSeries& a) {
  const int order = a.order();
  CharSeries out = zero_series(order);
  const CoeffY inv0 = invert_unit(a[0]);
  out.coefficients[0] = inv0;
  for (int k = 1; k <= order; ++k) {
    CoeffY acc;
    for (int i = 1; i <= k; ++i) acc += a[i] * out[k - i];
    out.coefficients[k] = -(acc * inv0);
  }
  return out;
}

CharSeries series_log(const CharSeries& a) {
  if (!a.normalized()) throw DomainError("logarithm requires a normalized series");
  const int order = a.order();
  CharSeries u = a;
  u.coefficients[0] = CoeffY();
  CharSeries out = zero_series(order);
  CharSeries power = u;
  for (int j = 1; j <= order; ++j) {
    const Rational scale = Rational(j % 2 == 1 ? 1 : -1) / Rational(j);
    for (int k = 0; k <= order; ++k) out.coefficients[k] += power[k] * CoeffY(scale);
    power = series_multiply(power, u);
  }
  return out;
}

CharSeries series_rescale(const CharSeries& a, const CoeffY& c) {
  CharSeries out = a;
  CoeffY factor(1);
  for (auto& coeff : out.coefficients) {
    coeff *= factor;
    factor *= c;
  }
  return out;
}

CharSeries series_builtin(SeriesKind kind, int order) {
  if (order < 0) throw DomainError("negative series order");
  CharSeries out = zero_series(order);
  switch (kind) {
    case SeriesKind::Exp:
      for (int k = 0; k <= order; ++k) out.coefficients[k] = CoeffY(Rational(1) / factorial(k));
      return out;
    case SeriesKind::Chern:
      out.coefficients[0] = CoeffY(1);
      if (order >= 1) out.coefficients[1] = CoeffY(1);
      return out;
    case SeriesKind::Todd: {
      // alpha/(1 - e^{-alpha}) = 1 / sum_k (-1)^k alpha^k/(k+1)!
      CharSeries denom = zero_series(order);
      for (int k = 0; k <= order; ++k) {
        denom.coefficients[k] = CoeffY(Rational(k % 2 == 0 ? 1 : -1) / factorial(k + 1));
      }
      return series_inverse(denom);
    }
    case SeriesKind::Qy: {
      CharSeries q = series_rescale(series_builtin(SeriesKind::Todd, order), CoeffY::one_plus_y_pow(1));
      if (order >= 1) q.coefficients[1] -= CoeffY::y();
      return q;
    }
    case SeriesKind::QyTilde: {
      CharSeries twist = zero_series(order);
      for (int k = 0; k <= order; ++k) {
        const Rational c = Rational(k % 2 == 0 ? 1 : -1) / factorial(k);
        twist.coefficients[k] = CoeffY(LaurentPolyY::monomial(c, 1));
      }
      twist.coefficients[0] += CoeffY(1);
      return series_multiply(series_builtin(SeriesKind::Todd, order), twist);
    }
    case SeriesKind::Lclass: {
      // alpha cosh(alpha) / sinh(alpha)
      CharSeries cosh = zero_series(order);
      CharSeries sinh_over = zero_series(order);
      for (int k = 0; k <= order; k += 2) {
        cosh.coefficients[k] = CoeffY(Rational(1) / factorial(k));
        sinh_over.coefficients[k] = CoeffY(Rational(1) / factorial(k + 1));
      }
      return series_multiply(cosh, series_inverse(sinh_over));
    }
  }
  throw DomainError("unknown series kind");
}

// ---------------------------------------------------------------------------

BundleData BundleData::trivial(const SmoothVariety& x, int rank) {
  return BundleData{rank, RingElement::one(x.ring), std::vector<RingElement>(rank, RingElement(x.ring))};
}

BundleData BundleData::line(const SmoothVariety& x, const RingElement& first_chern) {
  return from_roots(x, {first_chern});
}

BundleData BundleData::from_roots(const SmoothVariety& x, const std::vector<RingElement>& roots) {
  RingElement c = RingElement::one(x.ring);
  for (const auto& r : roots) {
    if (r.ring() != x.ring) throw DomainError("Chern root lives on a different ring");
    c = c * (RingElement::one(x.ring) + r);
  }
  return BundleData{static_cast<int>(roots.size()), std::move(c), roots};
}

BundleData BundleData::tangent(const SmoothVariety& x) {
  return BundleData{x.dimension, x.tangent_chern, std::nullopt};
}

BundleData BundleData::operator+(const BundleData& o) const {
  BundleData out{rank + o.rank, chern_total * o.chern_total, std::nullopt};
  if (split_roots && o.split_roots) {
    std::vector<RingElement> roots = *split_roots;
    roots.insert(roots.end(), o.split_roots->begin(), o.split_roots->end());
    out.split_roots = std::move(roots);
  }
  return out;
}

std::vector<RingElement> power_sums(const BundleData& b, int max_degree) {
  const RingPtr& ring = b.chern_total.ring();
  std::vector<RingElement> e;
  for (int k = 0; k <= max_degree; ++k) {
    e.push_back(k <= b.rank ? b.chern_total.component(k) : RingElement(ring));
  }
  std::vector<RingElement> p;
  p.push_back(RingElement::constant(ring, CoeffY(b.rank)));
  for (int k = 1; k <= max_degree; ++k) {
    // p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)^{k-1} k e_k
    RingElement acc(ring);
    for (int i = 1; i < k; ++i) {
      RingElement t = e[i] * p[k - i];
      if (i % 2 == 1) {
        acc += t;
      } else {
        acc -= t;
      }
    }
    RingElement last = e[k] * CoeffY(k);
    if (k % 2 == 1) {
      acc += last;
    } else {
      acc -= last;
    }
    p.push_back(std::move(acc));
  }
  return p;
}

std::vector<RingElement> elementary_from_power_sums(const std::vector<RingElement>& p) {
  const RingPtr& ring = p.at(0).ring();
  std::vector<RingElement> e{RingElement::one(ring)};
  for (std::size_t k = 1; k < p.size(); ++k) {
    // k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
    RingElement acc(ring);
    for (std::size_t i = 1; i <= k; ++i) {
      RingElement t = e[k - i] * p[i];
      if (i % 2 == 1) {
        acc += t;
      } else {
        acc -= t;
      }
    }
    e.push_back(acc * CoeffY(Rational(1) / Rational(static_cast<long>(k))));
  }
  return e;
}

RingElement multiplicative_class(const CharSeries& s, const BundleData& b, const SmoothVariety& x) {
  if (!s.normalized()) {
    throw DomainError("multiplicative_class needs a normalized series; use multiplicative_class_unnormalized");
  }
  if (b.chern_total.ring() != x.ring) throw DomainError("bundle does not live on the variety");
  const int d = x.dimension;
  const CharSeries log_s = series_log(truncate(s, d));
  const std::vector<RingElement> p = power_sums(b, d);
  RingElement z(x.ring);
  for (int k = 1; k <= d; ++k) z += p[k] * log_s[k];
  // exp(z) terminates: z has no constant term.
  RingElement result = RingElement::one(x.ring);
  RingElement power = RingElement::one(x.ring);
  for (int j = 1; j <= d; ++j) {
    power = power * z * CoeffY(Rational(1) / Rational(j));
    if (power.is_zero()) break;
    result += power;
  }
  if (!(result.constant_term() == CoeffY(1))) throw ConsistencyError("multiplicative class lost its unit term");
  return result;
}

RingElement multiplicative_class_unnormalized(const CharSeries& s, const BundleData& b, const SmoothVariety& x) {
  const CoeffY c0 = s[0];
  const CoeffY inv = invert_unit(c0);
  CharSeries normalized = s;
  for (auto& c : normalized.coefficients) c *= inv;
  return multiplicative_class(normalized, b, x) * c0.pow(b.rank);
}

RingElement additive_class(const CharSeries& f, const BundleData& b, const SmoothVariety& x) {
  if (b.chern_total.ring() != x.ring) throw DomainError("bundle does not live on the variety");
  const int d = x.dimension;
  const CharSeries g = truncate(f, d);
  const std::vector<RingElement> p = power_sums(b, d);
  RingElement out = RingElement::constant(x.ring, g[0] * CoeffY(b.rank));
  for (int k = 1; k <= d; ++k) out += p[k] * g[k];
  return out;
}

RingElement chern_character_1py(const BundleData& b, const SmoothVariety& x) {
  const CharSeries f = series_rescale(series_builtin(SeriesKind::Exp, x.dimension), CoeffY::one_plus_y_pow(1));
  return additive_class(f, b, x);
}

RingElement ch_lambda_y_cotangent(const SmoothVariety& x) {
  // (1 + y e^{-alpha})/(1+y) = 1 + y/(1+y) * sum_{k>=1} (-alpha)^k/k!
  const int d = x.dimension;
  CharSeries s = zero_series(d);
  s.coefficients[0] = CoeffY(1);
  for (int k = 1; k <= d; ++k) {
    const Rational c = Rational(k % 2 == 0 ? 1 : -1) / factorial(k);
    s.coefficients[k] = CoeffY(LaurentPolyY::monomial(c, 1), 1);
  }
  return multiplicative_class(s, BundleData::tangent(x), x) * CoeffY::one_plus_y_pow(d);
}

RingElement hirzebruch_class(const SmoothVariety& x, ClassVariant variant) {
  const BundleData tx = BundleData::tangent(x);
  if (variant == ClassVariant::Normalized) {
    return multiplicative_class(series_builtin(SeriesKind::Qy, x.dimension), tx, x);
  }
  return multiplicative_class(series_builtin(SeriesKind::Todd, x.dimension), tx, x) * ch_lambda_y_cotangent(x);
}

RingElement twist_td1py(const RingElement& a, const SmoothVariety& x) {
  if (a.ring() != x.ring) throw DomainError("class does not live on the variety");
  RingElement out = a;
  for (std::size_t i = 0; i < x.ring->basis_size(); ++i) {
    const int dimension = x.dimension - x.ring->basis_degree(i);
    out.set_coefficient(i, a.coefficient(i).times_one_plus_y_pow(-dimension));
  }
  return out;
}

LaurentPolyY chi_y(const SmoothVariety& x, const std::optional<BundleData>& e) {
  const BundleData bundle = e ? *e : BundleData::trivial(x);
  const RingElement integrand =
      hirzebruch_class(x, ClassVariant::Normalized) * chern_character_1py(bundle, x);
  const CoeffY value = integrate(x, integrand);
  auto poly = value.as_polynomial();
  if (!poly) throw ConsistencyError("chi_y kept a (1+y) denominator: " + value.str());
  return *poly;
}

CoeffY genus_hypersurface(const CharSeries& s, const SmoothVariety& ambient, const RingElement& divisor) {
  if (divisor.ring() != ambient.ring) throw DomainError("divisor class does not live on the ambient variety");
  const int d = ambient.dimension;
  const CharSeries t = truncate(s, d);
  if (!t.normalized()) throw DomainError("hypersurface genus needs a normalized series");
  // s(H) = 1 + w with w nilpotent; invert by the finite Neumann series.
  RingElement w(ambient.ring);
  RingElement power = RingElement::one(ambient.ring);
  for (int k = 1; k <= d; ++k) {
    power = power * divisor;
    w += power * t[k];
  }
  RingElement inverse = RingElement::one(ambient.ring);
  RingElement term = RingElement::one(ambient.ring);
  for (int j = 1; j <= d; ++j) {
    term = term * (-w);
    inverse += term;
  }
  const RingElement tangent_class = multiplicative_class(t, BundleData::tangent(ambient), ambient);
  return integrate(ambient, tangent_class * inverse * divisor);
}

LaurentPolyY chi_y_hypersurface(const SmoothVariety& ambient, const RingElement& divisor) {
  const CoeffY value = genus_hypersurface(series_builtin(SeriesKind::Qy, ambient.dimension), ambient, divisor);
  auto poly = value.as_polynomial();
  if (!poly) throw ConsistencyError("hypersurface chi_y kept a (1+y) denominator: " + value.str());
  return *poly;
}

LaurentPolyY blowup_chi_y(const LaurentPolyY& chi_x, const LaurentPolyY& chi_y_center, int codim) {
  if (codim < 1) throw DomainError("blow-up center must have codimension at least 1");
  LaurentPolyY sum;
  const LaurentPolyY minus_y = LaurentPolyY::monomial(-1, 1);
  LaurentPolyY power = LaurentPolyY::one();
  for (int i = 1; i < codim; ++i) {
    power *= minus_y;
    sum += power;
  }
  return chi_x + chi_y_center * sum;
}

CoeffY genus(const CharSeries& s, const SmoothVariety& x) {
  return integrate(x, multiplicative_class(s, BundleData::tangent(x), x));
}

std::vector<CoeffY> genus_table(const CharSeries& s, int n_max) {
  if (n_max < 0 || n_max > 10) throw DomainError("genus_table supports 0 <= n_max <= 10");
  std::vector<CoeffY> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(genus(s, ring_projective(n)));
  return out;
}

}  // namespace chargenus
