#include <gtest/gtest.h>

#include "qsuper/pbw.hpp"

using namespace qsuper;

namespace {

RatFunc q(int e) { return RatFunc::q_pow(e); }

}  // namespace

TEST(Multiply, OddSquareVanishes) {
  for (auto s : {Shape(1, 1), Shape(2, 1), Shape(2, 2)}) {
    Algebra A(s);
    int m = s.m;
    EXPECT_TRUE(A.multiply(A.Esimple(m), A.Esimple(m)).is_zero());
    EXPECT_TRUE(A.multiply(A.Fsimple(m), A.Fsimple(m)).is_zero());
  }
}

TEST(Multiply, EFinGl11) {
  Algebra A(Shape(1, 1));
  Element lhs = A.multiply(A.E(1, 2), A.F(1, 2));
  RatFunc inv = RatFunc(1) / (q(1) - q(-1));
  Element fe = A.multiply(A.F(1, 2), A.E(1, 2));
  Element expect = -fe + (A.Kalpha(1) - A.Kalpha(1, -1)).scaled(inv);
  EXPECT_EQ(lhs, expect);
  EXPECT_EQ(fe.size(), 1U);
}

TEST(Multiply, AdjacentMergeGl21) {
  Algebra A(Shape(2, 1));
  Element lhs = A.multiply(A.E(2, 3), A.E(1, 2));
  Element e12e23 = A.multiply(A.E(1, 2), A.E(2, 3));
  EXPECT_EQ(e12e23.size(), 1U);
  EXPECT_EQ(lhs, e12e23.scaled(q(1)) - A.E(1, 3).scaled(q(1)));
}

TEST(Multiply, KCommutesWithScalar) {
  Algebra A(Shape(2, 1));
  Element lhs = A.multiply(A.K(1), A.E(1, 2));
  Element ek = A.multiply(A.E(1, 2), A.K(1));
  EXPECT_EQ(lhs, ek.scaled(q(1)));
  // K_3 with q_3 = q^-1 acting on E_23
  EXPECT_EQ(A.multiply(A.K(3), A.E(2, 3)), A.multiply(A.E(2, 3), A.K(3)).scaled(q(1)));
}

TEST(Multiply, Unit) {
  Algebra A(Shape(2, 2));
  Element x = A.multiply(A.F(1, 4), A.E(2, 3));
  EXPECT_EQ(A.multiply(A.one(), x), x);
  EXPECT_EQ(A.multiply(x, A.one()), x);
}

TEST(Multiply, CompositeBracketsSimpleF) {
  // [E_13, F_12] in gl(2,1) through the defining recursion of E_13
  Algebra A(Shape(2, 1));
  Element E13 = A.multiply(A.E(1, 2), A.E(2, 3)) - A.multiply(A.E(2, 3), A.E(1, 2)).scaled(q(-1));
  EXPECT_EQ(E13, A.E(1, 3));
  Element br = A.commutator(A.E(1, 3), A.F(1, 2));
  Element via = A.commutator(E13, A.F(1, 2));
  EXPECT_EQ(br, via);
  EXPECT_EQ(br, A.ef_closed_bracket(1, 3, 1));
}

#include "qsuper/relations.hpp"

class RelationSuite : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(RelationSuite, AllRelationsVanish) {
  Algebra A(Shape(GetParam().first, GetParam().second));
  auto rels = all_relations(A);
  EXPECT_FALSE(rels.empty());
  for (const auto& r : rels) EXPECT_TRUE(evaluate(A, r).is_zero()) << r.name;
}

INSTANTIATE_TEST_SUITE_P(Shapes, RelationSuite,
                         ::testing::Values(std::make_pair(1, 1), std::make_pair(1, 2), std::make_pair(2, 1),
                                           std::make_pair(2, 2), std::make_pair(3, 1)));

TEST(RelationSuite, RowSignReadingFailsOffDiagonal) {
  // With sign (-1)^{delta_im} at i = m != j the cross relation asks E_m F_j + F_j E_m = 0,
  // which fails since E_m F_j = F_j E_m.
  Algebra A(Shape(2, 1));
  EXPECT_FALSE(evaluate(A, ef_cross_sign_by_row(A, 2, 1)).is_zero());
  EXPECT_TRUE(evaluate(A, ef_cross_sign_by_row(A, 1, 1)).is_zero());
}

class DividedPowers : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(DividedPowers, IdentitiesHold) {
  Algebra A(Shape(GetParam().first, GetParam().second));
  for (const auto& r : divided_power_identities(A, 3)) EXPECT_TRUE(evaluate(A, r).is_zero()) << r.name;
  for (const auto& r : kac_formula_identities(A, 3)) EXPECT_TRUE(evaluate(A, r).is_zero()) << r.name;
  for (const auto& r : bracket_shift_identities(A, 2)) EXPECT_TRUE(evaluate(A, r).is_zero()) << r.name;
}

INSTANTIATE_TEST_SUITE_P(Shapes, DividedPowers,
                         ::testing::Values(std::make_pair(1, 1), std::make_pair(1, 2), std::make_pair(2, 1),
                                           std::make_pair(1, 3), std::make_pair(3, 1), std::make_pair(2, 2)));

#include "random_elements.hpp"

using namespace qsuper::testing_support;

namespace {

std::vector<Shape> fuzz_shapes() { return {Shape(1, 1), Shape(1, 2), Shape(2, 1), Shape(2, 2), Shape(3, 1)}; }

}  // namespace

TEST(Multiply, AssociativityFuzz) {
  std::mt19937 g(17);
  for (auto s : fuzz_shapes()) {
    Algebra A(s);
    std::uniform_int_distribution<int> split(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
      int a = split(g), b = std::min(split(g), 6 - a), c = std::min(split(g), 6 - a - b);
      Element x = A.from_monomial(random_monomial(A, g, a));
      Element y = A.from_monomial(random_monomial(A, g, b));
      Element z = A.from_monomial(random_monomial(A, g, c));
      EXPECT_EQ(A.multiply(A.multiply(x, y), z), A.multiply(x, A.multiply(y, z)));
    }
  }
}

TEST(Multiply, GradingIsAdditive) {
  std::mt19937 g(3);
  Algebra A(Shape(2, 2));
  for (int trial = 0; trial < 50; ++trial) {
    Monomial a = random_monomial(A, g, 3), b = random_monomial(A, g, 3);
    Element p = A.multiply(A.from_monomial(a), A.from_monomial(b));
    IntVec w = A.weight(a);
    IntVec wb = A.weight(b);
    for (int j = 0; j < A.N(); ++j) w[j] += wb[j];
    for (const auto& [m, c] : p.terms()) {
      EXPECT_EQ(A.weight(m), w);
      EXPECT_EQ(A.parity(m), (A.parity(a) + A.parity(b)) % 2);
    }
  }
}

TEST(Multiply, NoRewriteLoops) {
  Algebra A(Shape(2, 2));
  A.multiply(A.product({A.E(2, 4), A.E(1, 3), A.E(1, 2), A.E(3, 4)}), A.product({A.F(1, 4), A.F(2, 3)}));
  EXPECT_LT(A.steps(), 200000);
}

TEST(Generators, Basics) {
  Algebra A(Shape(2, 1));
  EXPECT_EQ(A.parity(A.E(1, 3)), 1);
  EXPECT_EQ(A.parity(A.E(1, 2)), 0);
  EXPECT_EQ(A.k_monomial({0, 0, 0}), A.one());
  EXPECT_THROW(A.E(2, 2), DomainError);
  EXPECT_EQ(A.divided_power(GenKind::E, 1, 2, 0), A.one());
  Algebra B(Shape(3, 1));
  EXPECT_EQ(B.divided_power(GenKind::E, 1, 2, 2),
            B.multiply(B.E(1, 2), B.E(1, 2)).scaled(RatFunc(1) / RatFunc(gauss_int(2))));
  Algebra C(Shape(2, 2));
  EXPECT_THROW(C.divided_power(GenKind::E, 1, 4, 2), DomainError);
}

TEST(Generators, BracketElements) {
  for (auto s : {Shape(1, 1), Shape(2, 1), Shape(1, 2)}) {
    Algebra A(s);
    int N = A.N();
    EXPECT_EQ(A.kbracket_element(1, 3, 0), A.one());
    for (int i = 1; i <= N; ++i) {
      RatFunc qi = RatFunc::q_pow(A.rd().qsign(i));
      RatFunc den = qi - qi.inverse();
      EXPECT_EQ(A.kbracket_element(i, 0, 1), (A.Kalpha(i) - A.Kalpha(i, -1)).scaled(den.inverse()));
    }
    RatFunc qN = RatFunc::q_pow(A.rd().qsign(N));
    EXPECT_EQ(A.kbracket_element(N, 1, 1),
              (A.K(N).scaled(qN) - A.K(N, -1).scaled(qN.inverse())).scaled((qN - qN.inverse()).inverse()));
  }
}

TEST(Maps, OmegaIsConjugateAntiAutomorphism) {
  std::mt19937 g(9);
  for (auto s : {Shape(1, 1), Shape(2, 1), Shape(2, 2)}) {
    Algebra A(s);
    EXPECT_EQ(A.omega(A.E(1, 2)), A.F(1, 2));
    EXPECT_EQ(A.omega(A.K(1)), A.K(1, -1));
    for (int i = 1; i <= A.N(); ++i)
      for (int j = i + 1; j <= A.N(); ++j) EXPECT_EQ(A.omega(A.E(i, j)), A.F(i, j));
    for (int trial = 0; trial < 100; ++trial) {
      Element x = random_element(A, g, 3, 3);
      EXPECT_EQ(A.omega(A.omega(x)), x);
    }
    for (int trial = 0; trial < 70; ++trial) {
      Element x = random_element(A, g, 2, 2), y = random_element(A, g, 2, 2);
      EXPECT_EQ(A.omega(A.multiply(x, y)), A.multiply(A.omega(y), A.omega(x)));
    }
  }
}

TEST(Maps, PsiIsGradedAntiAutomorphism) {
  std::mt19937 g(10);
  for (auto s : {Shape(1, 1), Shape(2, 1), Shape(2, 2)}) {
    Algebra A(s);
    for (int i = 1; i < A.N(); ++i) {
      EXPECT_EQ(A.psi(A.Esimple(i)), A.Esimple(i));
      EXPECT_EQ(A.psi(A.Fsimple(i)), A.Fsimple(i));
    }
    EXPECT_EQ(A.psi(A.scalar(RatFunc::q_pow(1))), A.scalar(RatFunc::q_pow(-1)));
    for (int trial = 0; trial < 40; ++trial) {
      Element x = random_homogeneous(A, g, 2), y = random_homogeneous(A, g, 2);
      RatFunc sg(A.parity(x) * A.parity(y) == 1 ? -1 : 1);
      EXPECT_EQ(A.psi(A.multiply(x, y)), A.multiply(A.psi(y), A.psi(x)).scaled(sg));
      EXPECT_EQ(A.psi(A.psi(x)), x);
    }
  }
}

TEST(Maps, ClosedFormBracketMatchesExpansion) {
  for (auto s : {Shape(1, 1), Shape(2, 1), Shape(1, 2), Shape(2, 2), Shape(3, 1), Shape(1, 3)}) {
    Algebra A(s);
    for (int i = 1; i <= A.N(); ++i)
      for (int j = i + 1; j <= A.N(); ++j)
        for (int c = 1; c < A.N(); ++c) {
          if (i == c && j == c + 1) continue;
          EXPECT_EQ(A.ef_closed_bracket(i, j, c), A.commutator(A.E(i, j), A.Fsimple(c)))
              << s.to_string() << " " << i << j << " c=" << c;
        }
  }
  Algebra A(Shape(2, 1));
  // [E_13, F_12] = -E_23 K_1^-1 K_2
  Element expect = A.multiply(A.E(2, 3), A.k_monomial({-1, 1, 0})).scaled(RatFunc(-1));
  EXPECT_EQ(A.commutator(A.E(1, 3), A.F(1, 2)), expect);
}

TEST(AForm, Examples) {
  Algebra A(Shape(2, 1));
  auto c = A.a_form_coords(A.divided_power(GenKind::E, 1, 2, 3));
  ASSERT_EQ(c.size(), 1U);
  EXPECT_EQ(c.begin()->second, LaurentInt(1));
  EXPECT_THROW(A.a_form_coords(A.E(1, 2).scaled(RatFunc(1) / RatFunc(gauss_int(2)))), NotIntegral);
  Algebra B(Shape(3, 1));
  for (int i : {1, 2}) {
    Element p = B.multiply(B.divided_power(GenKind::E, i, i + 1, 2), B.divided_power(GenKind::F, i, i + 1, 2));
    EXPECT_NO_THROW(B.a_form_coords(p));
  }
  EXPECT_NO_THROW(B.a_form_coords(B.kbracket_element(1, -2, 3)));
  EXPECT_NO_THROW(B.a_form_coords(B.Kalpha(1) - B.one()));
  EXPECT_THROW(B.a_form_coords((B.Kalpha(1) - B.one()).scaled((RatFunc::q_pow(1) - RatFunc(1)).inverse())),
               NotIntegral);
}

TEST(AForm, TorusCoordinatesReassemble) {
  Algebra A(Shape(1, 1));
  for (int sign : {1, -1})
    for (int a = -5; a <= 5; ++a) {
      Element sum = A.zero();
      for (const auto& [d, t, c] : A.k_power_coords(a, sign)) {
        Element b = A.kbracket_element(1, 0, t);
        if (d) b = A.multiply(A.Kalpha(1), b);
        sum += b.scaled(c);
      }
      if (sign == A.rd().qsign(1)) EXPECT_EQ(sum, A.Kalpha(1, a));
    }
}
