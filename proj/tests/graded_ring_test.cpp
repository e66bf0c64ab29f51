#include <gtest/gtest.h>

#include <random>

#include "chargenus/catalog.hpp"
#include "chargenus/error.hpp"
#include "chargenus/graded_ring.hpp"
#include "chargenus/motivic.hpp"
#include "test_support.hpp"

using namespace chargenus;

namespace {

RingElement gen(const SmoothVariety& x, std::size_t i) { return RingElement::generator(x.ring, i); }
RingElement scalar(const SmoothVariety& x, long long c) { return RingElement::constant(x.ring, CoeffY(Rational(c))); }

}  // namespace

TEST(ProjectiveSpace, Basics) {
  const auto p1 = ring_projective(1);
  EXPECT_EQ(p1.ring->basis_size(), 2u);
  const auto h = gen(p1, 0);
  EXPECT_EQ(p1.tangent_chern, scalar(p1, 1) + scalar(p1, 2) * h);

  const auto p2 = ring_projective(2);
  const auto h2 = gen(p2, 0);
  EXPECT_EQ(p2.tangent_chern, scalar(p2, 1) + scalar(p2, 3) * h2 + scalar(p2, 3) * h2 * h2);
  EXPECT_TRUE(h2.pow(3).is_zero());

  const auto p0 = ring_projective(0);
  EXPECT_EQ(p0.ring->basis_size(), 1u);
  EXPECT_EQ(p0.tangent_chern, scalar(p0, 1));
  EXPECT_THROW(ring_projective(-1), DomainError);
}

TEST(ProjectiveSpace, Integrate) {
  const auto p2 = ring_projective(2);
  const auto h = gen(p2, 0);
  EXPECT_EQ(integrate(p2, scalar(p2, 3) * h * h), CoeffY(3));
  EXPECT_EQ(integrate(p2, scalar(p2, 1) + h), CoeffY(0));
  EXPECT_THROW(integrate(ring_projective(1), h), Error);
}

TEST(Product, Basics) {
  const auto p1 = ring_projective(1);
  const auto pp = ring_product(p1, p1);
  EXPECT_EQ(pp.dimension, 2);
  const auto h1 = gen(pp, 0), h2 = gen(pp, 1);
  const auto one = scalar(pp, 1), two = scalar(pp, 2);
  EXPECT_EQ(pp.tangent_chern, (one + two * h1) * (one + two * h2));
  EXPECT_EQ(integrate(pp, pp.tangent_chern.component(2)), CoeffY(4));
  EXPECT_EQ(integrate(pp, scalar(pp, 4) * h1 * h2), CoeffY(4));

  const auto p2 = ring_projective(2);
  const auto p2pt = ring_product(p2, ring_projective(0));
  EXPECT_EQ(p2pt.dimension, 2);
  EXPECT_EQ(p2pt.ring->basis_size(), 3u);
  EXPECT_EQ(integrate(p2pt, p2pt.tangent_chern), CoeffY(3));
}

TEST(ProjBundle, OverPoint) {
  const auto pt = ring_projective(0);
  const auto b = ring_proj_bundle(pt, {RingElement(pt.ring), RingElement(pt.ring)});
  EXPECT_EQ(b.dimension, 1);
  const auto xi = gen(b, 0);
  EXPECT_TRUE((xi * xi).is_zero());
  EXPECT_EQ(integrate(b, b.tangent_chern), CoeffY(2));
  EXPECT_THROW(ring_proj_bundle(pt, {}), DomainError);
}

TEST(ProjBundle, HirzebruchF2) {
  const auto p1 = ring_projective(1);
  const auto h = gen(p1, 0);
  const auto f2 = ring_proj_bundle(p1, {RingElement(p1.ring), scalar(p1, -2) * h});
  EXPECT_EQ(f2.dimension, 2);
  const auto hb = gen(f2, 0), xi = gen(f2, 1);
  EXPECT_EQ(xi * xi, scalar(f2, 2) * hb * xi);
  EXPECT_EQ(pushforward_proj_bundle(f2, xi * xi), scalar(p1, 2) * h);
  EXPECT_EQ(pushforward_proj_bundle(f2, xi), scalar(p1, 1));
  EXPECT_TRUE(pushforward_proj_bundle(f2, scalar(f2, 1)).is_zero());
  EXPECT_EQ(integrate(f2, f2.tangent_chern), CoeffY(4));
  EXPECT_THROW(pushforward_proj_bundle(p1, h), DomainError);
}

TEST(ProjBundle, RejectsBadOffsets) {
  const auto p1 = ring_projective(1);
  const auto h = gen(p1, 0);
  EXPECT_THROW(ring_proj_bundle(p1, {scalar(p1, 1)}), DomainError);
  EXPECT_THROW(ring_proj_bundle(p1, {h * CoeffY::y()}), DomainError);
}

TEST(RingElement, Printing) {
  const auto p1 = ring_projective(1);
  const auto e = scalar(p1, 1) + RingElement::constant(p1.ring, CoeffY(LaurentPolyY::parse("1 - y"))) * gen(p1, 0);
  EXPECT_EQ(e.str(), "deg0: 1; deg1: (1-y)*h");
  EXPECT_EQ(RingElement(p1.ring).str(), "0");
}

TEST(RingElement, MixedRingsRejected) {
  const auto p1 = ring_projective(1), p2 = ring_projective(2);
  EXPECT_THROW(gen(p1, 0) + gen(p2, 0), DomainError);
}

class CatalogRings : public ::testing::TestWithParam<std::size_t> {
 protected:
  static const std::vector<CatalogEntry>& catalog() {
    static const auto c = standard_catalog(4);
    return c;
  }
};

TEST_P(CatalogRings, NormalFormSoundness) {
  const auto& x = catalog().at(GetParam()).variety;
  std::mt19937 rng(100 + static_cast<unsigned>(GetParam()));
  for (int i = 0; i < 10; ++i) {
    const auto a = test_util::random_element(rng, x.ring, true);
    const auto b = test_util::random_element(rng, x.ring);
    const auto c = test_util::random_element(rng, x.ring);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST_P(CatalogRings, DegreeGrading) {
  const auto& x = catalog().at(GetParam()).variety;
  std::mt19937 rng(200 + static_cast<unsigned>(GetParam()));
  for (int i = 0; i < 5; ++i) {
    const auto a = test_util::random_element(rng, x.ring);
    const auto b = test_util::random_element(rng, x.ring);
    const auto ab = a * b;
    for (int k = 0; k <= x.dimension; ++k) {
      RingElement expected(x.ring);
      for (int j = 0; j <= k; ++j) expected += a.component(j) * b.component(k - j);
      EXPECT_EQ(ab.component(k), expected);
    }
  }
}

TEST_P(CatalogRings, EulerNumberMatchesMotive) {
  const auto& entry = catalog().at(GetParam());
  const auto top = entry.variety.tangent_chern.component(entry.variety.dimension);
  EXPECT_EQ(integrate(entry.variety, top), CoeffY(measure_euler(entry.motive))) << entry.name;
  EXPECT_EQ(entry.variety.tangent_chern.constant_term(), CoeffY(1));
  EXPECT_LE(entry.variety.tangent_chern.top_nonzero_degree(), entry.variety.dimension);
}

INSTANTIATE_TEST_SUITE_P(Catalog, CatalogRings, ::testing::Range<std::size_t>(0, standard_catalog(4).size()));

TEST(ProjBundle, ProjectionFormula) {
  std::mt19937 rng(31);
  std::vector<CatalogEntry> bundles = {
      catalog_hirzebruch_surface(2),
      catalog_proj_bundle(catalog_projective(2), {{0}, {1}, {-1}}),
      catalog_proj_bundle(catalog_product(catalog_projective(1), catalog_projective(1)), {{0, 0}, {1, -1}}),
  };
  for (const auto& entry : bundles) {
    const auto& p = entry.variety;
    const auto& kind = std::get<ProjBundleKind>(p.ring->kind());
    SmoothVariety base{"base", kind.base, p.dimension - static_cast<int>(kind.offsets.size()) + 1, {}};
    for (int i = 0; i < 20; ++i) {
      const auto a = test_util::random_element(rng, p.ring, true);
      const auto b = test_util::random_element(rng, kind.base);
      EXPECT_EQ(integrate(p, a * pullback_from_base(p, b)), integrate(base, pushforward_proj_bundle(p, a) * b))
          << entry.name;
    }
  }
}

TEST(Product, Pullbacks) {
  const auto p1 = ring_projective(1), p2 = ring_projective(2);
  const auto x = ring_product(p1, p2);
  const auto a = gen(p1, 0);
  const auto b = gen(p2, 0) * gen(p2, 0);
  EXPECT_EQ(integrate(x, pullback_left(x, a) * pullback_right(x, b)), CoeffY(1));
  EXPECT_EQ(hyperplane_classes(x).size(), 2u);
}
