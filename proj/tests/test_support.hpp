#pragma once

#include <random>

#include "chargenus/bipoly.hpp"
#include "chargenus/catalog.hpp"
#include "chargenus/graded_ring.hpp"
#include "chargenus/laurent_poly.hpp"

namespace chargenus::test_util {

inline Rational random_rational(std::mt19937& rng, int range = 9) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, range);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

inline LaurentPolyY random_laurent(std::mt19937& rng, int low = -2, int high = 4) {
  std::uniform_int_distribution<int> count(0, 4);
  std::uniform_int_distribution<int> exp(low, high);
  LaurentPolyY p;
  for (int i = count(rng); i > 0; --i) p += LaurentPolyY::monomial(random_rational(rng), exp(rng));
  return p;
}

inline BiPolyUV random_bipoly(std::mt19937& rng, int max_exp = 3) {
  std::uniform_int_distribution<int> count(0, 5);
  std::uniform_int_distribution<int> exp(0, max_exp);
  BiPolyUV p;
  for (int i = count(rng); i > 0; --i) p += BiPolyUV::monomial(random_rational(rng), exp(rng), exp(rng));
  return p;
}

/// Random element with small rational coefficients (no y dependence unless asked).
inline RingElement random_element(std::mt19937& rng, const RingPtr& ring, bool with_y = false) {
  RingElement e(ring);
  std::bernoulli_distribution keep(0.6);
  for (std::size_t i = 0; i < ring->basis_size(); ++i) {
    if (!keep(rng)) continue;
    CoeffY c(random_rational(rng, 5));
    if (with_y) c = c + CoeffY(LaurentPolyY::monomial(random_rational(rng, 3), 1));
    e.set_coefficient(i, c);
  }
  return e;
}

}  // namespace chargenus::test_util
