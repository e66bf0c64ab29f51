#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "chargenus/catalog.hpp"
#include "chargenus/char_class.hpp"
#include "chargenus/error.hpp"
#include "chargenus/motivic.hpp"
#include "test_support.hpp"

using namespace chargenus;

namespace {

BiPolyUV bp(const char* text) { return BiPolyUV::parse(text); }
LaurentPolyY poly(const char* text) { return LaurentPolyY::parse(text); }

MotivicClass atom(std::string_view name) { return MotivicClass::of(AtomRegistry::global().get(name)); }

}  // namespace

TEST(Atoms, Builtins) {
  auto& reg = AtomRegistry::global();
  EXPECT_EQ(reg.get("pt")->e_polynomial, BiPolyUV::one());
  EXPECT_EQ(reg.get("affineLine")->e_polynomial, BiPolyUV::uv());
  EXPECT_EQ(reg.get("P3")->e_polynomial, bp("1 + u*v + u^2*v^2 + u^3*v^3"));
  EXPECT_EQ(reg.get("elliptic")->e_polynomial, bp("(1-u)*(1-v)"));
  EXPECT_THROW(reg.get("nonexistent"), DomainError);
}

TEST(Atoms, Registration) {
  AtomRegistry reg;
  const auto k3 = reg.register_atom("K3", bp("1 + u^2 + 20*u*v + v^2 + u^2*v^2"), 2);
  EXPECT_EQ(measure_euler(MotivicClass::of(k3)), Rational(24));
  EXPECT_EQ(measure_chi_y(MotivicClass::of(k3)), poly("2 - 20*y + 2*y^2"));
  EXPECT_THROW(reg.register_atom("K3", bp("1"), 0), DomainError);
  EXPECT_THROW(reg.register_atom("big", bp("u^3"), 1), DomainError);
  EXPECT_THROW(reg.register_atom("L", bp("u*v"), 1), DomainError);
  EXPECT_THROW(reg.register_atom("P7", bp("1"), 7), DomainError);
  EXPECT_THROW(reg.register_atom("bad name", bp("1"), 0), DomainError);
}

TEST(Atoms, TomlCatalog) {
  AtomRegistry reg;
  reg.load_toml(R"(# user atoms
[[atom]]
name = "K3"
dim = 2
e = "1 + u^2 + 20*u*v + v^2 + u^2*v^2"

[[atom]]
name = "genus2"
dim = 1
e = "1 - 2*u - 2*v + u*v"
)");
  EXPECT_EQ(reg.get("genus2")->dimension, 1);
  EXPECT_EQ(measure_euler(MotivicClass::of(reg.get("genus2"))), Rational(-2));
  EXPECT_THROW(reg.load_toml("[[atom]]\nname = \"x\"\ndim = 1.5\ne = \"1\"\n"), ParseError);
  EXPECT_THROW(reg.load_toml("[[atom]]\nname = \"y\"\ne = \"1\"\n"), Error);
}

TEST(K0, Scissor) {
  const auto p1 = atom("P1");
  const auto split = MotivicClass::point() + MotivicClass::lefschetz();
  EXPECT_EQ(measure_E(p1), bp("1 + u*v"));
  EXPECT_EQ(measure_E(split), measure_E(p1));
  EXPECT_TRUE((p1 - p1).is_zero());
  const auto prod = k0_arith(atom("P1"), atom("P2"), K0Op::Mul);
  EXPECT_EQ(measure_E(prod), bp("(1 + u*v)*(1 + u*v + u^2*v^2)"));
  EXPECT_EQ(prod.str(), "[P1*P2]");
  EXPECT_EQ((MotivicClass::lefschetz(2) * MotivicClass::lefschetz(3)), MotivicClass::lefschetz(5));
}

TEST(Measures, Examples) {
  EXPECT_EQ(measure_chi_y(MotivicClass::lefschetz()), poly("-y"));
  const auto ell = atom("elliptic");
  EXPECT_TRUE(measure_chi_y(ell).is_zero());
  EXPECT_EQ(measure_Hc(ell), bp("(1+u)*(1+v)"));
  EXPECT_EQ(measure_weight(ell), LaurentPolyY::parse("(1+y)^2"));
  EXPECT_EQ(measure_str(measure(ell, MeasureKind::Weight), MeasureKind::Weight), "1 + 2*w + w^2");
  EXPECT_EQ(measure_euler(atom("P2")), Rational(3));
  EXPECT_EQ(measure_euler(ell), Rational(0));
}

TEST(Measures, LocalizedClasses) {
  const auto inv = MotivicClass::lefschetz(-1);
  EXPECT_THROW(measure_E(inv), DomainError);
  EXPECT_THROW(measure_chi_y(inv), DomainError);
  const auto cleared = inv * MotivicClass::lefschetz(2);
  EXPECT_EQ(measure_E(cleared), BiPolyUV::uv());
}

TEST(Measures, ProjectiveExpansion) {
  for (int n = 0; n <= 6; ++n) {
    const auto p = atom("P" + std::to_string(n));
    const auto ex = MotivicClass::projective_expansion(n);
    for (auto kind : {MeasureKind::E, MeasureKind::Hc, MeasureKind::ChiY, MeasureKind::Weight, MeasureKind::Euler})
      EXPECT_EQ(measure(p, kind), measure(ex, kind)) << n;
  }
}

TEST(Measures, DiagramCommutes) {
  auto& reg = AtomRegistry::global();
  reg.get("P4");
  for (const auto& name : reg.names()) {
    const auto a = atom(name);
    const auto via_chi = measure_chi_y(a).evaluate(-1);
    const auto via_weight = measure_weight(a).evaluate(-1);
    EXPECT_EQ(via_chi, via_weight) << name;
    EXPECT_EQ(via_chi, measure_euler(a)) << name;
  }
}

TEST(Measures, RingHomomorphism) {
  std::mt19937 rng(53);
  const std::vector<std::string> names = {"pt", "affineLine", "elliptic", "P1", "P2", "P3"};
  std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3), lexp(0, 2);
  auto random_class = [&] {
    MotivicClass c;
    for (int i = 0; i < 3; ++i)
      c += MotivicClass::of(AtomRegistry::global().get(names[pick(rng)]), BigInt(coef(rng)), lexp(rng));
    return c;
  };
  for (int i = 0; i < 100; ++i) {
    const auto a = random_class(), b = random_class();
    EXPECT_EQ(measure_E(a * b), measure_E(a) * measure_E(b));
    EXPECT_EQ(measure_E(a + b), measure_E(a) + measure_E(b));
    EXPECT_EQ(measure_E(a - b), measure_E(a) - measure_E(b));
    EXPECT_EQ(measure_chi_y(a * b), measure_chi_y(a) * measure_chi_y(b));
  }
}

TEST(Blowup, Identity) {
  const auto p2 = atom("P2");
  EXPECT_TRUE(verify_blowup_identity(p2 + MotivicClass::lefschetz(), atom("P1"), p2, MotivicClass::point()));
  EXPECT_TRUE(verify_blowup_identity(p2, MotivicClass(), p2, MotivicClass()));
  EXPECT_FALSE(verify_blowup_identity(p2, atom("P1"), p2, MotivicClass::point()));
}

TEST(Completed, GeometricFactors) {
  const auto c = CompletedClass{MotivicClass::point(), {GeomFactor{2}}};
  const auto e = completed_measure_E(c);
  EXPECT_EQ(e.numerator(), BiPolyUV::one());
  EXPECT_EQ(e.expanded_denominator(), bp("1 + u*v"));
  const auto chi = completed_measure_chi_y(c);
  EXPECT_EQ(chi.expanded_denominator(), poly("1 - y"));
  // (L - 1)/(L^2 - 1) is stored as (L-1) over g_1 times (L-1); after telescoping it is 1/g_1.
  const auto tel = CompletedClass{MotivicClass::lefschetz() - MotivicClass::point(), {GeomFactor{2}}};
  const RatFuncUV lhs(bp("u^2*v^2 - 1"), {GeomFactor{2}}, BiPolyUV::uv());
  EXPECT_TRUE(ratfunc_equal(lhs, RatFuncUV(bp("u*v - 1"), {}, BiPolyUV::uv())));
  EXPECT_TRUE(ratfunc_equal(completed_measure_E(tel) * RatFuncUV(bp("1 + u*v"), {}, BiPolyUV::uv()),
                            RatFuncUV(bp("u*v - 1"), {}, BiPolyUV::uv())));
  // 1/g_3 == (1 + uv)/(g_1 g_3)
  const auto g = CompletedClass::geometric_factor(3);
  EXPECT_TRUE(ratfunc_equal(completed_measure_E(g),
                            RatFuncUV(bp("1 + u*v"), {GeomFactor{2}, GeomFactor{4}}, BiPolyUV::uv())));
  EXPECT_TRUE(CompletedClass::geometric_factor(0).denominator_factors.empty());
}

TEST(Completed, FactorTelescoping) {
  // (L - 1)/(L^{a+1} - 1) * g_a == 1
  for (int a = 1; a <= 12; ++a) {
    const auto f = completed_measure_E(CompletedClass::geometric_factor(a));
    const RatFuncUV ga(GeomFactor{a + 1}.expand(BiPolyUV::uv()), {}, BiPolyUV::uv());
    EXPECT_TRUE(ratfunc_equal(f * ga, RatFuncUV(BiPolyUV::one(), {}, BiPolyUV::uv()))) << a;
  }
}

TEST(HodgeAgreement, CatalogChiY) {
  for (const auto& entry : standard_catalog(6)) {
    EXPECT_EQ(measure_chi_y(entry.motive), chi_y(entry.variety)) << entry.name;
    EXPECT_EQ(measure_euler(entry.motive), chi_y(entry.variety).evaluate(-1)) << entry.name;
  }
}

TEST(Atoms, ConcurrentAccess) {
  AtomRegistry reg;
  std::vector<std::thread> threads;
  std::vector<BiPolyUV> results(8);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      BiPolyUV acc;
      for (int n = 0; n < 20; ++n) {
        const auto p = reg.projective_space(n % 7);
        acc += measure_E(k0_arith(MotivicClass::of(p), MotivicClass::of(reg.get("elliptic")), K0Op::Mul, reg));
      }
      results[static_cast<std::size_t>(t)] = acc;
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& r : results) EXPECT_EQ(r, results[0]);
  EXPECT_EQ(reg.find("P3")->e_polynomial, bp("1 + u*v + u^2*v^2 + u^3*v^3"));
}
