#include <gtest/gtest.h>

#include <random>

#include "qsuper/scalars.hpp"

using namespace qsuper;

namespace {

LaurentInt q(int e) { return LaurentInt::q_pow(e); }

// q-Pascal recurrence, independent of the factorial-quotient route
LaurentInt pascal_binomial(int m, int n) {
  if (n < 0 || n > m) return LaurentInt(0);
  if (n == 0 || n == m) return LaurentInt(1);
  return q(-n) * pascal_binomial(m - 1, n) + q(m - n) * pascal_binomial(m - 1, n - 1);
}

long ordinary_binomial(long m, long n) {
  long r = 1;
  for (long k = 1; k <= n; ++k) r = r * (m - n + k) / k;
  return r;
}

RatFunc random_rat(std::mt19937& g) {
  std::uniform_int_distribution<int> c(-3, 3), d(0, 2);
  auto poly = [&] {
    std::vector<Rational> v;
    int deg = d(g);
    for (int k = 0; k <= deg; ++k) v.emplace_back(c(g));
    return QPoly(v);
  };
  QPoly den = poly();
  while (den.is_zero()) den = poly();
  return RatFunc(poly(), den);
}

}  // namespace

TEST(GaussInt, SmallValues) {
  EXPECT_EQ(gauss_int(1, 1), LaurentInt(1));
  EXPECT_EQ(gauss_int(2, 1), q(1) + q(-1));
  EXPECT_EQ(gauss_int(3, -1), q(2) + LaurentInt(1) + q(-2));
  for (int n = -6; n <= 6; ++n) {
    EXPECT_EQ(gauss_int(-n, 1), -gauss_int(n, 1));
    EXPECT_EQ(gauss_int(n, 1).bar(), gauss_int(n, 1));
    EXPECT_EQ(gauss_int(n, -1), gauss_int(n, 1));
  }
}

TEST(GaussBinomial, MatchesPascalAndClassical) {
  EXPECT_EQ(gauss_binomial(4, 2, 1), q(4) + q(2) + LaurentInt(2) + q(-2) + q(-4));
  EXPECT_EQ(gauss_binomial(5, 5, 1), LaurentInt(1));
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; n <= 8; ++n) {
      LaurentInt b = gauss_binomial(m, n, 1);
      EXPECT_EQ(b, pascal_binomial(m, n)) << m << " " << n;
      EXPECT_EQ(b.bar(), b);
      EXPECT_EQ(b.eval_at_one(), BigInt(n <= m ? ordinary_binomial(m, n) : 0));
    }
}

TEST(KBracketScalar, EqualsBinomial) {
  EXPECT_EQ(kbracket_scalar(5, 2, 0, 1), RatFunc(1));
  EXPECT_EQ(kbracket_scalar(1, 0, 1, 1), RatFunc(1));
  EXPECT_EQ(kbracket_scalar(2, 0, 2, 1), RatFunc(1));
  for (int s : {1, -1})
    for (int z = -3; z <= 8; ++z)
      for (int c = -3; c <= 8; ++c) {
        if (z + c < 0 || z + c > 8) continue;
        for (int t = 0; t <= z + c; ++t) {
          RatFunc k = kbracket_scalar(z, c, t, s);
          ASSERT_TRUE(k.to_laurent().has_value());
          EXPECT_EQ(*k.to_laurent(), pascal_binomial(z + c, t)) << z << " " << c << " " << t;
        }
      }
}

TEST(RatFunc, FieldAxioms) {
  std::mt19937 g(11);
  for (int trial = 0; trial < 200; ++trial) {
    RatFunc a = random_rat(g), b = random_rat(g), c = random_rat(g);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), RatFunc(1));
    EXPECT_EQ(a.bar().bar(), a);
    EXPECT_EQ((a * b).bar(), a.bar() * b.bar());
  }
}

TEST(RatFunc, CanonicalForm) {
  RatFunc x = RatFunc(q(1) - LaurentInt(1)) / RatFunc(q(2) - LaurentInt(1));
  EXPECT_EQ(x, RatFunc(1) / RatFunc(q(1) + LaurentInt(1)));
  EXPECT_EQ(x.den().lead(), Rational(1));
}

TEST(CycloNum, FieldAxiomsAndRoots) {
  std::mt19937 g(5);
  for (int l : {3, 5, 7}) {
    CycloNum eta = CycloNum::eta(l);
    EXPECT_EQ(eta.pow(l), CycloNum(1));
    for (int k = 1; k < l; ++k) EXPECT_NE(eta.pow(k), CycloNum(1));
    std::uniform_int_distribution<int> c(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
      auto rnd = [&] {
        CycloNum x(0);
        for (int k = 0; k < l - 1; ++k) x += CycloNum(c(g)) * eta.pow(k);
        return x;
      };
      CycloNum a = rnd(), b = rnd(), d = rnd();
      EXPECT_EQ((a * b) * d, a * (b * d));
      EXPECT_EQ(a * (b + d), a * b + a * d);
      if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), CycloNum(1));
    }
  }
  EXPECT_THROW(CycloNum::eta(4), std::domain_error);
}

TEST(EvaluateAtRoot, Examples) {
  CycloNum eta = CycloNum::eta(3);
  EXPECT_EQ(evaluate_at_root(RatFunc(q(3)), 3), CycloNum(1));
  EXPECT_TRUE(evaluate_at_root(RatFunc(gauss_int(3, 1)), 3).is_zero());
  // 1/(eta-1): (eta-1)(eta-1) = eta^2 - 2 eta + 1 = -3 eta, so 1/(eta-1) = (eta-1)/(-3 eta)
  // and 1/eta = eta^2 = -eta-1, giving (eta-1)(-eta-1)/(-3) = (eta^2-1)/3 = (-eta-2)/3.
  CycloNum v = evaluate_at_root(RatFunc(1) / RatFunc(q(1) - LaurentInt(1)), 3);
  EXPECT_EQ(v, (CycloNum(-2) - eta) * CycloNum(Rational(1, 3)));
  EXPECT_EQ(v * (eta - CycloNum(1)), CycloNum(1));
  EXPECT_THROW(evaluate_at_root(RatFunc(1) / RatFunc(gauss_int(3, 1)), 3), DenominatorVanishes);
}
