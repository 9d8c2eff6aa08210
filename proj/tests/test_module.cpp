#include <gtest/gtest.h>

#include <random>

#include "qsuper/module.hpp"
#include "qsuper/relations.hpp"
#include "random_elements.hpp"

using namespace qsuper;
using namespace qsuper::testing_support;

namespace {

int find_label(const WeightModule<RatFunc>& M, const std::string& s) {
  for (size_t i = 0; i < M.dim(); ++i)
    if (M.label(static_cast<int>(i)) == s) return static_cast<int>(i);
  return -1;
}

// Largest total simple-root height of the F-part over the terms of a.
int f_height(const Algebra& A, const Element& a) {
  int best = 0;
  for (const auto& [m, c] : a.terms()) {
    int h = 0;
    for (int r = 0; r < A.R(); ++r) h += m.f(r) * (A.rd().root(r).j - A.rd().root(r).i);
    best = std::max(best, h);
  }
  return best;
}

std::vector<IntVec> dominant_grid(const RootData& rd, int lo, int hi) {
  std::vector<IntVec> out;
  IntVec cur(rd.N(), lo);
  while (true) {
    if (rd.in_Xplus(cur)) out.push_back(cur);
    int k = 0;
    while (k < rd.N() && cur[k] == hi) cur[k++] = lo;
    if (k == rd.N()) break;
    ++cur[k];
  }
  return out;
}

// Every stored operator moves weight by its root and K_{alpha_i} acts by q_i^{z_i}.
template <class F>
void expect_weight_compatible(const WeightModule<F>& M) {
  const RootData& rd = M.rd();
  for (const auto& [k, mat] : M.ops()) {
    IntVec beta = rd.root_vector(k.i, k.i + 1);
    long s = (k.kind == GenKind::E ? 1 : -1) * k.power;
    for (size_t b = 0; b < mat.size(); ++b)
      for (const auto& [idx, c] : mat[b]) {
        IntVec want = M.weight(static_cast<int>(b));
        for (size_t t = 0; t < want.size(); ++t) want[t] += s * beta[t];
        EXPECT_EQ(M.weight(idx), want) << k.to_string();
        if (rd.parity(k.i, k.i + 1) && k.power % 2) {
          EXPECT_NE(M.parity(idx), M.parity(static_cast<int>(b)));
        } else {
          EXPECT_EQ(M.parity(idx), M.parity(static_cast<int>(b)));
        }
      }
  }
  for (size_t idx = 0; idx < M.dim(); ++idx) {
    IntVec z = M.z_weight(static_cast<int>(idx));
    for (int i = 1; i < rd.N(); ++i)
      EXPECT_EQ(M.kalpha_eigen(i, static_cast<int>(idx)), M.qpow(rd.qsign(i) * z[i - 1]));
  }
}

long total(const Character& ch) {
  long t = 0;
  for (const auto& [w, k] : ch) t += k;
  return t;
}

}  // namespace

// ------------------------------------------------------------ free-module model

TEST(VermaModel, OddEOnSingleLetter) {
  WeightModule<RatFunc> M = verma_model(Shape(1, 1), {1, 0}, 2);
  int x = find_label(M, "xi[1]");
  ASSERT_GE(x, 0);
  EXPECT_EQ(M.apply({GenKind::E, 1, 1}, M.unit(x)), (SVec<RatFunc>{{M.top(), RatFunc(1)}}));
}

TEST(VermaModel, FPrependsLetter) {
  WeightModule<RatFunc> M = verma_model(Shape(2, 2), {0, 1, 2, -1}, 3);
  for (int i = 1; i < 4; ++i) {
    int x = find_label(M, "xi[" + std::to_string(i) + "]");
    ASSERT_GE(x, 0);
    EXPECT_EQ(M.apply({GenKind::F, i, 1}, M.unit(M.top())), M.unit(x));
  }
}

TEST(VermaModel, OddLetterSquaresToZero) {
  WeightModule<RatFunc> M = verma_model(Shape(1, 1), {3, 1}, 2);
  EXPECT_EQ(M.dim(), 2u);
  SVec<RatFunc> v = M.apply({GenKind::F, 1, 1}, M.apply({GenKind::F, 1, 1}, M.unit(M.top())));
  EXPECT_TRUE(v.empty());
}

// Dimension of the degree-r slice of the quotient of the free algebra by the
// Serre-type ideal equals the number of PBW monomials in the negative part with
// that height, since the quotient is the negative half.
TEST(VermaModel, SliceDimensionsMatchNegativePart) {
  for (Shape s : {Shape(1, 1), Shape(2, 1), Shape(1, 2), Shape(2, 2)}) {
    Algebra A(s);
    const RootData& rd = A.rd();
    const int depth = 4;
    WeightModule<RatFunc> M = verma_model(s, IntVec(s.m + s.n, 0), depth);
    std::vector<long> slice(depth + 1, 0), pbw(depth + 1, 0);
    for (size_t i = 0; i < M.dim(); ++i) ++slice[word_degree(M, static_cast<int>(i))];
    // count F-part exponent vectors by height
    std::vector<int> e(rd.num_roots(), 0);
    std::function<void(int, int)> rec = [&](int r, int h) {
      if (r == rd.num_roots()) {
        ++pbw[h];
        return;
      }
      int ht = rd.root(r).j - rd.root(r).i;
      int cap = rd.root(r).odd ? 1 : depth;
      for (int k = 0; k <= cap && h + k * ht <= depth; ++k) rec(r + 1, h + k * ht);
    };
    rec(0, 0);
    EXPECT_EQ(slice, pbw) << s.to_string();
  }
}

TEST(VermaModel, RelationsAwayFromBoundary) {
  for (Shape s : {Shape(1, 1), Shape(2, 1), Shape(1, 2)}) {
    Algebra A(s);
    const int depth = 5;
    WeightModule<RatFunc> M = verma_model(s, s.m + s.n == 2 ? IntVec{2, 1} : IntVec{1, 0, 2}, depth);
    std::vector<int> low;
    for (size_t i = 0; i < M.dim(); ++i)
      if (word_degree(M, static_cast<int>(i)) <= depth - 2) low.push_back(static_cast<int>(i));
    EXPECT_TRUE(relation_failures(M, all_relations(A), low).empty()) << s.to_string();
  }
}

class OracleEquivalence : public ::testing::TestWithParam<Shape> {};

TEST_P(OracleEquivalence, ActionComposesLikeStraightenedProduct) {
  Shape s = GetParam();
  Algebra A(s);
  const int depth = 4;
  IntVec lambda = s.m + s.n == 2 ? IntVec{2, -1} : IntVec{3, 1, 1};
  WeightModule<RatFunc> M = verma_model(s, lambda, depth);
  std::mt19937 g(41);
  int done = 0, nonzero = 0;
  while (done < 100) {
    Element a = random_element(A, g, 2, 2), b = random_element(A, g, 2, 2);
    int h = f_height(A, a) + f_height(A, b);
    std::vector<int> ok;
    for (size_t i = 0; i < M.dim(); ++i)
      if (word_degree(M, static_cast<int>(i)) + h <= depth) ok.push_back(static_cast<int>(i));
    if (ok.empty()) continue;
    int v = ok[g() % ok.size()];
    SVec<RatFunc> lhs = act(M, A.multiply(a, b), M.unit(v));
    SVec<RatFunc> rhs = act(M, a, act(M, b, M.unit(v)));
    EXPECT_EQ(lhs, rhs) << "trial " << done;
    if (!lhs.empty()) ++nonzero;
    ++done;
  }
  EXPECT_GT(nonzero, 20);
}

INSTANTIATE_TEST_SUITE_P(Shapes, OracleEquivalence, ::testing::Values(Shape(1, 1), Shape(2, 1)),
                         [](const auto& info) { return "gl" + std::to_string(info.param.m) + std::to_string(info.param.n); });

// ------------------------------------------------------------ even and Kac modules

TEST(EvenSimple, WeylDimensions) {
  Algebra A21(Shape(2, 1)), A22(Shape(2, 2)), A11(Shape(1, 1));
  EXPECT_EQ(simple_even_module(A21, {1, 0, 0}).dim(), 2u);
  EXPECT_EQ(simple_even_module(A22, {2, 0, 1, 0}).dim(), 6u);
  for (IntVec l : {IntVec{0, 0}, IntVec{3, -2}, IntVec{-1, 5}}) EXPECT_EQ(simple_even_module(A11, l).dim(), 1u);
  EXPECT_THROW(simple_even_module(A21, {0, 1, 0}), NonDominant);
  EXPECT_THROW(kac_module(A22, {0, 0, 0, 1}), NonDominant);
}

TEST(EvenSimple, ParityZeroAndRelations) {
  Algebra A(Shape(3, 1));
  WeightModule<RatFunc> L = simple_even_module(A, {2, 1, 0, 0});
  EXPECT_EQ(static_cast<long>(L.dim()), weyl_dimension_even(A.shape(), {2, 1, 0, 0}));
  for (size_t i = 0; i < L.dim(); ++i) EXPECT_EQ(L.parity(static_cast<int>(i)), 0);
  EXPECT_EQ(singular_vectors(L).size(), 1u);
}

TEST(KacModule, Gl21Example) {
  Algebra A(Shape(2, 1));
  WeightModule<RatFunc> K = kac_module(A, {1, 1, 1});
  ASSERT_EQ(K.dim(), 4u);
  std::map<IntVec, int> ws;
  for (size_t i = 0; i < K.dim(); ++i) ++ws[K.weight(static_cast<int>(i))];
  EXPECT_EQ(ws, (std::map<IntVec, int>{{{1, 1, 1}, 1}, {{0, 1, 2}, 1}, {{1, 0, 2}, 1}, {{0, 0, 3}, 1}}));
  EXPECT_EQ(kac_module(A, {2, 0, 0}).dim(), 12u);
  Character ch = character(K);
  EXPECT_EQ(ch.size(), 4u);
  EXPECT_EQ(total(ch), 4);
}

TEST(KacModule, Gl11TwoWeights) {
  Algebra A(Shape(1, 1));
  WeightModule<RatFunc> K = kac_module(A, {1, 0});
  ASSERT_EQ(K.dim(), 2u);
  EXPECT_EQ(K.z_weight(K.top()), (IntVec{1, 0}));
  // lower vector has epsilon weight (0,1); the odd simple root is isotropic so z_1 is unchanged
  EXPECT_EQ(character(K), (Character{{{1, 0}, 1}, {{1, 1}, 1}}));
}

TEST(KacModule, DimensionLawOnGrid) {
  int checked = 0;
  for (Shape s : {Shape(1, 1), Shape(2, 1), Shape(1, 2), Shape(2, 2)}) {
    Algebra A(s);
    auto grid = dominant_grid(A.rd(), -1, 2);
    std::mt19937 g(5);
    std::shuffle(grid.begin(), grid.end(), g);
    if (grid.size() > 4) grid.resize(4);
    for (const auto& l : grid) {
      long w = weyl_dimension_even(s, l);
      EXPECT_EQ(static_cast<long>(simple_even_module(A, l).dim()), w);
      EXPECT_EQ(static_cast<long>(kac_module(A, l).dim()), (1L << (s.m * s.n)) * w);
      ++checked;
    }
  }
  EXPECT_GE(checked, 10);
}

TEST(KacModule, WeightsAndRelations) {
  for (auto [s, l] : std::vector<std::pair<Shape, IntVec>>{
           {Shape(1, 1), {0, 0}}, {Shape(2, 1), {1, 0, 2}}, {Shape(1, 2), {1, 1, 0}}, {Shape(2, 2), {1, 0, 1, 0}}}) {
    Algebra A(s);
    WeightModule<RatFunc> K = kac_module(A, l);
    expect_weight_compatible(K);
    EXPECT_TRUE(relation_failures(K, all_relations(A)).empty()) << s.to_string();
  }
}

TEST(KacModule, DividedPowerOperators) {
  Algebra A(Shape(2, 1));
  WeightModule<RatFunc> K = kac_module(A, {3, 0, 1}, 3);
  const OpKey F1{GenKind::F, 1, 1}, E1{GenKind::E, 1, 1};
  for (size_t b = 0; b < K.dim(); ++b) {
    SVec<RatFunc> v = K.unit(static_cast<int>(b));
    RatFunc two = RatFunc(gauss_factorial(2)), six = RatFunc(gauss_factorial(3));
    EXPECT_EQ(K.apply({GenKind::F, 1, 2}, v), scaled(K.apply(F1, K.apply(F1, v)), RatFunc(1) / two));
    EXPECT_EQ(K.apply({GenKind::E, 1, 3}, v), scaled(K.apply(E1, K.apply(E1, K.apply(E1, v))), RatFunc(1) / six));
  }
}

TEST(Singular, Gl11) {
  Algebra A(Shape(1, 1));
  EXPECT_EQ(singular_vectors(kac_module(A, {0, 0})).size(), 2u);
  EXPECT_EQ(singular_vectors(kac_module(A, {1, 0})).size(), 1u);
  WeightModule<RatFunc> empty(Shape(1, 1));
  EXPECT_TRUE(singular_vectors(empty).empty());
  EXPECT_TRUE(character(empty).empty());
}

TEST(SimpleHead, Gl11) {
  Algebra A(Shape(1, 1));
  EXPECT_EQ(simple_head(kac_module(A, {1, 0})).dim(), 2u);
  EXPECT_EQ(simple_head(kac_module(A, {0, 0})).dim(), 1u);
  WeightModule<RatFunc> L0 = simple_even_module(A, {4, 2});
  EXPECT_EQ(simple_head(L0).dim(), L0.dim());
  WeightModule<RatFunc> noTop(Shape(1, 1));
  noTop.add_basis("a", {0, 0}, 0);
  EXPECT_THROW(simple_head(noTop), NotHighestWeight);
}

// Every nonzero vector of the head generates it: a singular line only at the top
// together with generation from the top vector.
TEST(SimpleHead, HeadIsSimple) {
  Algebra A(Shape(2, 1));
  for (IntVec l : {IntVec{0, 0, 0}, IntVec{1, 0, -1}, IntVec{2, 1, -2}}) {
    WeightModule<RatFunc> L = simple_head(kac_module(A, l));
    EXPECT_EQ(singular_vectors(L).size(), 1u);
    EXPECT_EQ(submodule(L, {L.unit(L.top())}).rank(), L.dim());
    EXPECT_TRUE(relation_failures(L, all_relations(A)).empty());
  }
}

class Typicality : public ::testing::TestWithParam<Shape> {};

TEST_P(Typicality, TypicalIffKacSimple) {
  Algebra A(GetParam());
  const RootData& rd = A.rd();
  int typical = 0, atypical = 0;
  for (const auto& l : dominant_grid(rd, -3, 3)) {
    bool by_c = true;
    for (int r = rd.num_even(); r < rd.num_roots(); ++r) {
      const Root& rt = rd.root(r);
      if (l[rt.i - 1] + l[rt.j - 1] == rd.c_value(rt.i, rt.j)) by_c = false;
    }
    bool by_p = rd.p_factor(l) != 0;
    EXPECT_EQ(by_c, by_p);
    WeightModule<RatFunc> K = kac_module(A, l);
    bool simple = simple_head(K).dim() == K.dim();
    EXPECT_EQ(simple, rd.is_typical(l)) << "lambda " << ::testing::PrintToString(l);
    (simple ? typical : atypical)++;
  }
  EXPECT_GT(typical, 0);
  EXPECT_GT(atypical, 0);
}

INSTANTIATE_TEST_SUITE_P(Shapes, Typicality, ::testing::Values(Shape(1, 1), Shape(2, 1), Shape(1, 2)),
                         [](const auto& info) { return "gl" + std::to_string(info.param.m) + std::to_string(info.param.n); });

// F_1^d F_0^psi v for bounded psi stay independent when the even gaps are large.
TEST(KacModule, PbwMonomialsIndependent) {
  for (auto [s, l] : std::vector<std::pair<Shape, IntVec>>{{Shape(2, 1), {3, 0, 1}}, {Shape(2, 2), {3, 0, 4, 0}}}) {
    Algebra A(s);
    const RootData& rd = A.rd();
    ASSERT_TRUE(rd.is_typical(l));
    WeightModule<RatFunc> K = kac_module(A, l);
    std::vector<SVec<RatFunc>> vecs;
    std::vector<int> psi(rd.num_even(), 0);
    std::function<void(int, int)> rec = [&](int r, int budget) {
      if (r == rd.num_even()) {
        for (int d = 0; d < (1 << rd.num_odd()); ++d) {
          Monomial m = A.identity_monomial();
          for (int t = 0; t < rd.num_even(); ++t) m.f(t) = psi[t];
          for (int t = 0; t < rd.num_odd(); ++t) m.f(rd.num_even() + t) = d >> t & 1;
          vecs.push_back(act(K, A.from_monomial(m), K.unit(K.top())));
        }
        return;
      }
      for (int k = 0; k <= budget; ++k) {
        psi[r] = k;
        rec(r + 1, budget - k);
      }
      psi[r] = 0;
    };
    rec(0, 2);
    EXPECT_EQ(rank_of(vecs), vecs.size()) << s.to_string();
  }
}

TEST(SimpleHead, TopEvenSubmoduleIsSimple) {
  for (auto [s, l] : std::vector<std::pair<Shape, IntVec>>{
           {Shape(2, 1), {2, 0, -2}}, {Shape(2, 1), {1, 1, 1}}, {Shape(1, 2), {2, 1, 0}}, {Shape(2, 2), {1, 0, 0, -1}}}) {
    Algebra A(s);
    WeightModule<RatFunc> L = simple_head(kac_module(A, l));
    std::vector<OpKey> even;
    for (const auto& [k, mat] : L.ops())
      if (!A.rd().parity(k.i, k.i + 1)) even.push_back(k);
    EXPECT_EQ(static_cast<long>(submodule(L, {L.unit(L.top())}, even).rank()), weyl_dimension_even(s, l));
  }
}

// ------------------------------------------------------------ tensor products

TEST(Tensor, TrivialFactorIsIdentity) {
  Algebra A(Shape(2, 1));
  WeightModule<RatFunc> K = kac_module(A, {1, 0, 1});
  WeightModule<RatFunc> T = tensor_module(K, trivial_module<RatFunc>(A.shape()));
  EXPECT_EQ(character(T), character(K));
  for (const auto& [k, mat] : K.ops()) EXPECT_EQ(T.op(k), mat) << k.to_string();
}

TEST(Tensor, CharacterConvolutionAndRelations) {
  for (auto [s, l1, l2] : std::vector<std::tuple<Shape, IntVec, IntVec>>{
           {Shape(1, 1), {1, 0}, {0, 0}}, {Shape(2, 1), {1, 0, 0}, {0, 0, 1}}, {Shape(1, 2), {0, 0, 0}, {1, 1, 0}}}) {
    Algebra A(s);
    WeightModule<RatFunc> M = kac_module(A, l1, 2), N = simple_head(kac_module(A, l2, 2));
    WeightModule<RatFunc> T = tensor_module(M, N);
    EXPECT_EQ(character(T), convolve(character(M), character(N)));
    expect_weight_compatible(T);
    EXPECT_TRUE(relation_failures(T, all_relations(A)).empty()) << s.to_string();
    // divided squares on the tensor product agree with squares of the simple action
    for (int i = 1; i < A.N(); ++i) {
      if (!T.has_op({GenKind::F, i, 2})) continue;
      for (size_t b = 0; b < T.dim(); ++b) {
        SVec<RatFunc> v = T.unit(static_cast<int>(b));
        RatFunc two = RatFunc(gauss_factorial(2, A.rd().qsign(i)));
        EXPECT_EQ(T.apply({GenKind::F, i, 2}, v),
                  scaled(T.apply({GenKind::F, i, 1}, T.apply({GenKind::F, i, 1}, v)), RatFunc(1) / two));
        EXPECT_EQ(T.apply({GenKind::E, i, 2}, v),
                  scaled(T.apply({GenKind::E, i, 1}, T.apply({GenKind::E, i, 1}, v)), RatFunc(1) / two));
      }
    }
  }
}

TEST(Tensor, ShapeMismatch) {
  EXPECT_THROW(tensor_module(trivial_module<RatFunc>(Shape(1, 1)), trivial_module<RatFunc>(Shape(1, 2))), DomainError);
}

TEST(Height, SimpleRootCount) {
  EXPECT_EQ(height_of({1, 1, 1}, {0, 0, 3}), 3);
  EXPECT_EQ(height_of({2, 0}, {1, 1}), 1);
}
