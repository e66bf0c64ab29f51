#include <gtest/gtest.h>

#include <random>

#include "chargenus/bipoly.hpp"
#include "chargenus/coeff_y.hpp"
#include "chargenus/error.hpp"
#include "chargenus/laurent_poly.hpp"
#include "chargenus/rational.hpp"
#include "chargenus/ratfunc.hpp"
#include "test_support.hpp"

using namespace chargenus;

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
  EXPECT_EQ(Rational(-3, 2).denominator(), 2);
  EXPECT_EQ(Rational(0, 7).str(), "0");
  EXPECT_EQ(Rational(0, 7).denominator(), 1);
  for (int x : {-5, 0, 3}) EXPECT_EQ(Rational(x) * 1, Rational(x));
}

TEST(Rational, DivisionByZero) {
  EXPECT_THROW(Rational(3, 4) / Rational(0), DivisionByZero);
  EXPECT_FALSE(Rational(3, 4).checked_div(0).has_value());
  EXPECT_EQ(*Rational(3, 4).checked_div(Rational(1, 2)), Rational(3, 2));
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), DivisionByZero);
}

TEST(Rational, ParseAndBigValues) {
  EXPECT_EQ(Rational::parse("-12/8"), Rational(-3, 2));
  EXPECT_EQ(factorial(25).str(), "15511210043330985984000000");
  EXPECT_EQ(binomial(10, 3), Rational(120));
  EXPECT_EQ(binomial(3, 5), Rational(0));
}

TEST(LaurentPolyY, ParsePrintRoundTrip) {
  const auto p = LaurentPolyY::parse("1 - 2*y + 2*y^2 - y^3");
  EXPECT_EQ(p.str(), "1 - 2*y + 2*y^2 - y^3");
  EXPECT_EQ(LaurentPolyY::parse("3/2*y - 1/2").str(), "-1/2 + 3/2*y");
  EXPECT_EQ(LaurentPolyY::parse("(1+y)^2").str(), "1 + 2*y + y^2");
  EXPECT_THROW(LaurentPolyY::parse("1 + x"), ParseError);
  EXPECT_THROW(LaurentPolyY::parse("1 +"), ParseError);
}

TEST(LaurentPolyY, RoundTripProperty) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto p = test_util::random_laurent(rng);
    EXPECT_EQ(LaurentPolyY::parse(p.str()), p) << p.str();
    EXPECT_EQ(LaurentPolyY::parse(p.compact_str()), p) << p.compact_str();
  }
}

TEST(LaurentPolyY, RingAxioms) {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto a = test_util::random_laurent(rng);
    const auto b = test_util::random_laurent(rng);
    const auto c = test_util::random_laurent(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(LaurentPolyY, ExactDivision) {
  const auto p = LaurentPolyY::parse("1 + 2*y + y^2");
  EXPECT_EQ(*p.divide_by_one_plus_y(), LaurentPolyY::parse("1 + y"));
  EXPECT_FALSE(LaurentPolyY::parse("1 - y").divide_by_one_plus_y().has_value());
  const auto q = LaurentPolyY::parse("y^-2 + y^-1");
  EXPECT_EQ(*q.divide_by_one_plus_y(), LaurentPolyY::monomial(1, -2));
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto a = test_util::random_laurent(rng);
    const auto b = test_util::random_laurent(rng);
    if (b.is_zero()) continue;
    auto q2 = (a * b).divide_exact(b);
    ASSERT_TRUE(q2.has_value());
    EXPECT_EQ(*q2, a);
  }
}

TEST(CoeffY, Normalize) {
  // (1+y)(1-y) / (1+y) -> 1 - y
  const auto n1 = coeffy_normalize(LaurentPolyY::parse("1 - y^2"), 1);
  EXPECT_EQ(n1.poly(), LaurentPolyY::parse("1 - y"));
  EXPECT_EQ(n1.one_plus_y_power(), 0);
  const auto n2 = coeffy_normalize(LaurentPolyY::parse("1 - y"), 0);
  EXPECT_EQ(n2.poly(), LaurentPolyY::parse("1 - y"));
  // long division oracle: (1 + 2y + y^2) / (1+y) = 1 + y remainder 0
  const auto n3 = coeffy_normalize(LaurentPolyY::parse("1 + 2*y + y^2"), 1);
  EXPECT_EQ(n3.poly(), LaurentPolyY::parse("1 + y"));
  EXPECT_EQ(n3.one_plus_y_power(), 0);
  EXPECT_THROW(coeffy_normalize(LaurentPolyY::parse("1"), -1), DomainError);
}

TEST(CoeffY, NormalFormProperty) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> k(0, 4);
  for (int i = 0; i < 300; ++i) {
    auto p = test_util::random_laurent(rng, 0, 4);
    const int extra = k(rng);
    p = p * CoeffY::one_plus_y_pow(extra).poly();
    const int den = k(rng);
    const CoeffY c(p, den);
    if (c.one_plus_y_power() > 0) {
      EXPECT_FALSE(c.poly().evaluate(-1).is_zero());
    }
    // same value as p / (1+y)^den
    const Rational y0(2, 3);
    EXPECT_EQ(c.evaluate(y0), p.evaluate(y0) / Rational(5, 3).pow(den));
  }
}

TEST(CoeffY, FieldLikeArithmetic) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> k(0, 3);
  for (int i = 0; i < 100; ++i) {
    const CoeffY a(test_util::random_laurent(rng), k(rng));
    const CoeffY b(test_util::random_laurent(rng), k(rng));
    const CoeffY c(test_util::random_laurent(rng), k(rng));
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a.times_one_plus_y_pow(3).times_one_plus_y_pow(-3), a);
    const Rational y0 = test_util::random_rational(rng);
    if (y0 == Rational(-1) || y0.is_zero()) continue;
    EXPECT_EQ((a * b).evaluate(y0), a.evaluate(y0) * b.evaluate(y0));
  }
  EXPECT_EQ(CoeffY(LaurentPolyY::parse("1 - y"), 2).str(), "(1 - y)/(1 + y)^2");
}

TEST(BiPolyUV, ParsePrint) {
  EXPECT_EQ(BiPolyUV::parse("(1+u)*(1+v)").str(), "1 + u + v + u*v");
  EXPECT_EQ(BiPolyUV::parse("u^2*v^2 + u*v + 1").str(), "1 + u*v + u^2*v^2");
  EXPECT_EQ(BiPolyUV::parse("(1-u)*(1-v)").negate_variables(), BiPolyUV::parse("(1+u)*(1+v)"));
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    const auto p = test_util::random_bipoly(rng);
    EXPECT_EQ(BiPolyUV::parse(p.str()), p) << p.str();
  }
  EXPECT_THROW(BiPolyUV::parse("u^-1"), ParseError);
  EXPECT_THROW(BiPolyUV::parse("u*y"), ParseError);
}

TEST(BiPolyUV, RingAxioms) {
  std::mt19937 rng(19);
  for (int i = 0; i < 100; ++i) {
    const auto a = test_util::random_bipoly(rng);
    const auto b = test_util::random_bipoly(rng);
    const auto c = test_util::random_bipoly(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(BiPolyUV, ExactDivision) {
  std::mt19937 rng(23);
  for (int i = 0; i < 100; ++i) {
    const auto a = test_util::random_bipoly(rng);
    const auto b = test_util::random_bipoly(rng);
    if (b.is_zero()) continue;
    auto q = (a * b).divide_exact(b);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, a);
  }
  EXPECT_FALSE(BiPolyUV::parse("1").divide_exact(BiPolyUV::parse("1 + u*v")).has_value());
  EXPECT_FALSE(BiPolyUV::parse("u + v").divide_exact(BiPolyUV::parse("u*v")).has_value());
}

TEST(GeomFactor, Telescoping) {
  const LaurentPolyY t = LaurentPolyY::var();
  for (int a = 1; a <= 12; ++a) {
    const GeomFactor g{a + 1};
    EXPECT_EQ((t - LaurentPolyY(1)) * g.expand(t), t.pow(a + 1) - LaurentPolyY(1));
  }
}

TEST(RatFunc, Equality) {
  const BiPolyUV t = BiPolyUV::uv();
  const RatFuncUV x(BiPolyUV::u(), {GeomFactor{2}}, t);
  EXPECT_TRUE(ratfunc_equal(x, x));
  // (t^2 - 1)/g_1 == t - 1
  const RatFuncUV lhs(t * t - BiPolyUV::one(), {GeomFactor{2}}, t);
  const RatFuncUV rhs(t - BiPolyUV::one(), {}, t);
  EXPECT_TRUE(ratfunc_equal(lhs, rhs));
  EXPECT_FALSE(ratfunc_equal(RatFuncUV(BiPolyUV::one(), {}, t), RatFuncUV(t, {}, t)));
}

TEST(RatFunc, EquivalenceRelation) {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> exps(2, 4);
  const LaurentPolyY t = LaurentPolyY::var();
  for (int i = 0; i < 60; ++i) {
    const auto base = test_util::random_laurent(rng, 0, 4);
    const GeomFactor f1{exps(rng)}, f2{exps(rng)};
    // Three spellings of base / g: plain, expanded by f1, expanded by f1 and f2.
    const RatFuncY a(base, {f2}, t);
    const RatFuncY b(base * f1.expand(t), {f1, f2}, t);
    const RatFuncY c(base * f1.expand(t) * f1.expand(t), {f1, f1, f2}, t);
    EXPECT_TRUE(ratfunc_equal(a, a));
    EXPECT_EQ(ratfunc_equal(a, b), ratfunc_equal(b, a));
    EXPECT_TRUE(ratfunc_equal(a, b) && ratfunc_equal(b, c) && ratfunc_equal(a, c));
  }
}

TEST(RatFunc, ToPolynomial) {
  const BiPolyUV t = BiPolyUV::uv();
  const RatFuncUV poly(t * t + t, {}, t);
  EXPECT_EQ(*poly.to_polynomial(), t * t + t);
  const RatFuncUV div((t - BiPolyUV::one()) * (t + BiPolyUV::one()), {GeomFactor{2}}, t);
  EXPECT_EQ(*ratfunc_to_polynomial(div), t - BiPolyUV::one());
  EXPECT_FALSE(RatFuncUV(BiPolyUV::one(), {GeomFactor{2}}, t).to_polynomial().has_value());
}

TEST(RatFunc, SumOverCommonDenominator) {
  const LaurentPolyY t = LaurentPolyY::var();
  const RatFuncY half(LaurentPolyY(1), {GeomFactor{2}}, t);
  const RatFuncY sum = half + half;
  EXPECT_EQ(sum.denominator_factors().size(), 1u);
  EXPECT_TRUE(ratfunc_equal(sum, RatFuncY(LaurentPolyY(2), {GeomFactor{2}}, t)));
  EXPECT_THROW(ratfunc_equal(half, RatFuncY(LaurentPolyY(1), {}, -t)), DomainError);
}
