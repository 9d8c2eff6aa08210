// Acceptance battery: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "qsuper/braid.hpp"
#include "qsuper/hopf.hpp"
#include "qsuper/relations.hpp"
#include "qsuper/rootofunity.hpp"
#include "random_elements.hpp"

using namespace qsuper;
using namespace qsuper::testing_support;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) note << what;
      ok = false;
    }
  }
};

std::string vec_to_string(const IntVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::vector<Shape> shapes(std::initializer_list<std::pair<int, int>> l) {
  std::vector<Shape> v;
  for (auto [m, n] : l) v.emplace_back(m, n);
  return v;
}

Element evaluate_mapped(Algebra& A, const Relation& rel, const std::function<Element(const Element&)>& f) {
  Element sum = A.zero();
  for (const auto& t : rel.terms) {
    std::vector<Element> img;
    for (const auto& x : t.factors) img.push_back(f(x));
    sum += A.product(img).scaled(t.coeff);
  }
  return sum;
}

std::vector<Element> generators(Algebra& A) {
  std::vector<Element> g;
  for (int i = 1; i < A.N(); ++i) {
    g.push_back(A.Esimple(i));
    g.push_back(A.Fsimple(i));
  }
  for (int j = 1; j <= A.N(); ++j) {
    g.push_back(A.K(j));
    g.push_back(A.K(j, -1));
  }
  return g;
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

// Product formula for gl(m) x gl(n), computed here rather than through the library.
long weyl_oracle(const Shape& s, const IntVec& l) {
  Rational num(1);
  auto block = [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i)
      for (int j = i + 1; j < hi; ++j) num *= Rational(l[i] - l[j] + j - i, j - i);
  };
  block(0, s.m);
  block(s.m, s.m + s.n);
  return num.get_num().get_si();
}

// ------------------------------------------------------------------ criteria

void c1(Outcome& o) {
  for (Shape s : shapes({{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}})) {
    Algebra A(s);
    for (const auto& r : all_relations(A)) o.require(evaluate(A, r).is_zero(), s.to_string() + " " + r.name);
  }
}

void c2(Outcome& o) {
  std::mt19937 g(2024);
  for (Shape s : shapes({{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}})) {
    Algebra A(s);
    std::uniform_int_distribution<int> split(0, 3);
    for (int t = 0; t < 200; ++t) {
      int a = split(g), b = std::min(split(g), 6 - a), c = std::min(split(g), 6 - a - b);
      Element x = A.from_monomial(random_monomial(A, g, a));
      Element y = A.from_monomial(random_monomial(A, g, b));
      Element z = A.from_monomial(random_monomial(A, g, c));
      o.require(A.multiply(A.multiply(x, y), z) == A.multiply(x, A.multiply(y, z)), s.to_string());
    }
  }
}

void c3(Outcome& o) {
  for (Shape s : shapes({{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 2}})) {
    Algebra A(s);
    for (const auto& r : divided_power_identities(A, 3)) o.require(evaluate(A, r).is_zero(), r.name);
    for (const auto& r : bracket_shift_identities(A, 3)) o.require(evaluate(A, r).is_zero(), r.name);
    for (const auto& r : kac_formula_identities(A, 3)) o.require(evaluate(A, r).is_zero(), r.name);
  }
}

void c4(Outcome& o) {
  std::mt19937 g(4);
  for (Shape s : shapes({{1, 1}, {2, 1}})) {
    Algebra A(s);
    const int depth = 4;
    WeightModule<RatFunc> M = verma_model(s, s.m + s.n == 2 ? IntVec{2, -1} : IntVec{3, 1, 1}, depth);
    int done = 0;
    while (done < 100) {
      Element a = random_element(A, g, 2, 2), b = random_element(A, g, 2, 2);
      int h = 0;
      for (const Element* x : {&a, &b}) {
        int best = 0;
        for (const auto& [m, c] : x->terms()) {
          int hh = 0;
          for (int r = 0; r < A.R(); ++r) hh += m.f(r) * (A.rd().root(r).j - A.rd().root(r).i);
          best = std::max(best, hh);
        }
        h += best;
      }
      std::vector<int> ok;
      for (size_t i = 0; i < M.dim(); ++i)
        if (word_degree(M, static_cast<int>(i)) + h <= depth) ok.push_back(static_cast<int>(i));
      if (ok.empty()) continue;
      SVec<RatFunc> v = M.unit(ok[g() % ok.size()]);
      o.require(act(M, A.multiply(a, b), v) == act(M, a, act(M, b, v)), s.to_string());
      ++done;
    }
  }
}

void c5(Outcome& o) {
  std::mt19937 g(5);
  for (Shape s : shapes({{1, 1}, {2, 1}, {1, 2}, {2, 2}})) {
    Algebra A(s);
    Hopf H(A);
    for (const auto& rel : all_relations(A)) {
      TensorElement sum(A.shape(), 2);
      for (const auto& t : rel.terms) {
        TensorElement acc = H.tensor(A.one(), A.one());
        for (const auto& f : t.factors) acc = H.tensor_multiply(acc, H.delta(f));
        sum += acc.scaled(t.coeff);
      }
      o.require(sum.is_zero(), s.to_string() + " delta " + rel.name);
    }
    for (const auto& x : generators(A)) {
      TensorElement d = H.delta(x);
      o.require(H.delta_on_leg(d, 0) == H.delta_on_leg(d, 1), "coassociativity");
      o.require(H.counit_on_leg(d, 0) == x && H.counit_on_leg(d, 1) == x, "counit");
      Element unit = A.scalar(H.counit(x));
      o.require(H.multiply_legs(H.antipode_on_leg(d, 0)) == unit, "antipode");
      o.require(H.multiply_legs(H.antipode_on_leg(d, 1)) == unit, "antipode");
    }
    // words in the simple E_i of length up to 4
    std::uniform_int_distribution<int> len(1, 4), idx(1, A.N() - 1);
    for (int t = 0; t < 20; ++t) {
      std::vector<Element> word;
      IntVec wt(A.N(), 0);
      for (int k = len(g); k > 0; --k) {
        int i = idx(g);
        word.push_back(A.Esimple(i));
        IntVec a = A.k_alpha_vec(i);
        for (int j = 0; j < A.N(); ++j) wt[j] += a[j];
      }
      Element EI = A.product(word);
      if (EI.is_zero()) continue;
      TensorElement right(A.shape(), 2), d = H.delta(EI);
      for (const auto& [key, c] : d.terms())
        if (key[1].is_k_only()) right.add_term(key, c);
      o.require(right == H.tensor(EI, A.k_monomial(wt)), "triangularity");
    }
  }
}

void c6(Outcome& o) {
  std::mt19937 g(6);
  for (Shape s : shapes({{2, 1}, {2, 2}, {3, 1}})) {
    Algebra A(s);
    auto rels = all_relations(A);
    for (int i = 1; i < A.N(); ++i) {
      if (i == A.rd().m()) continue;
      for (const auto& rel : rels) {
        o.require(evaluate_mapped(A, rel, [&](const Element& x) { return braid_t(A, i, x); }).is_zero(),
                  "T preserves " + rel.name);
        o.require(evaluate_mapped(A, rel, [&](const Element& x) { return braid_t_inv(A, i, x); }).is_zero(),
                  "T^-1 preserves " + rel.name);
      }
      std::vector<Element> xs = generators(A);
      for (int t = 0; t < 20; ++t) xs.push_back(random_element(A, g, 2, 3));
      for (const auto& x : xs) {
        o.require(braid_t_inv(A, i, braid_t(A, i, x)) == x && braid_t(A, i, braid_t_inv(A, i, x)) == x, "inverse");
        o.require(A.omega(braid_t(A, i, x)) == braid_t(A, i, A.omega(x)), "omega");
      }
    }
  }
  int chains = 0;
  for (Shape s : shapes({{2, 2}, {3, 1}})) {
    Algebra A(s);
    const int m = A.rd().m();
    for (int i = 1; i <= A.N(); ++i)
      for (int j = i + 2; j <= A.N(); ++j)
        for (int k = i; k < j; ++k) {
          bool clear = true;
          for (int t = i; t < j; ++t)
            if (t != k && t == m) clear = false;
          if (!clear) continue;
          o.require(root_vector_via_braid(A, GenKind::E, i, j, k) == A.E(i, j), "E chain");
          o.require(root_vector_via_braid(A, GenKind::F, i, j, k) == A.F(i, j), "F chain");
          ++chains;
        }
  }
  o.require(chains > 0, "no chains");
}

void c7(Outcome& o) {
  for (auto [s, l] : std::vector<std::pair<Shape, IntVec>>{{Shape(2, 1), {3, 0, 1}}, {Shape(2, 2), {3, 0, 4, 0}}}) {
    Algebra A(s);
    const RootData& rd = A.rd();
    o.require(rd.is_typical(l), "weight not typical");
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
    o.require(rank_of(vecs) == vecs.size(), s.to_string() + " rank deficit");
  }
}

void c8(Outcome& o) {
  int checked = 0;
  for (Shape s : shapes({{1, 1}, {2, 1}, {1, 2}, {2, 2}})) {
    Algebra A(s);
    auto grid = dominant_grid(A.rd(), -1, 2);
    std::mt19937 g(8);
    std::shuffle(grid.begin(), grid.end(), g);
    if (grid.size() > 4) grid.resize(4);
    for (const auto& l : grid) {
      long w = weyl_oracle(s, l);
      o.require(static_cast<long>(simple_even_module(A, l).dim()) == w, "dim L0");
      o.require(static_cast<long>(kac_module(A, l).dim()) == (1L << (s.m * s.n)) * w, "dim K");
      ++checked;
    }
  }
  o.require(checked >= 10, "grid too small");
}

void c9(Outcome& o) {
  for (Shape s : shapes({{1, 1}, {2, 1}, {1, 2}})) {
    Algebra A(s);
    const RootData& rd = A.rd();
    for (const auto& l : dominant_grid(rd, -3, 3)) {
      bool by_c = true;
      for (int r = rd.num_even(); r < rd.num_roots(); ++r) {
        const Root& rt = rd.root(r);
        if (l[rt.i - 1] + l[rt.j - 1] == rd.c_value(rt.i, rt.j)) by_c = false;
      }
      o.require(by_c == (rd.p_factor(l) != 0), "c-form against P");
      WeightModule<RatFunc> K = kac_module(A, l);
      o.require((simple_head(K).dim() == K.dim()) == rd.is_typical(l), s.to_string() + " simplicity");
    }
  }
}

void c10(Outcome& o) {
  for (Shape s : shapes({{1, 1}, {2, 1}, {2, 2}})) {
    Algebra A(s);
    for (const auto& inst : classical_limit_check(A))
      if (inst.counted) o.require(inst.holds, s.to_string() + " " + inst.family + " " + inst.name);
  }
}

void c11(Outcome& o) {
  SmallGroupCounts c = small_group_counts(Shape(1, 1), 3);
  o.require(c.tilde_u == 36 && c.u == 144, "gl(1,1) counts");
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n) {
      const long l = 3, i0 = (m * (m - 1) + n * (n - 1)) / 2, i1 = m * n;
      auto p = [](long b, long e) {
        long r = 1;
        while (e-- > 0) r *= b;
        return r;
      };
      SmallGroupCounts k = small_group_counts(Shape(m, n), 3);
      o.require(k.u == p(4, i1) * p(l, 2 * i0) * p(2 * l, m + n), "u closed product");
      o.require(k.tilde_u == p(4, i1) * p(l, 2 * i0) * p(l, m + n), "u~ closed product");
    }
  Algebra A(Shape(2, 1));
  for (IntVec z : {IntVec{1, 0, 0}, IntVec{2, 1, 0}, IntVec{0, 2, 1}, IntVec{1, 1, -1}}) {
    RestrictedReport r = restricted_report(A, z, 3);
    std::string at = " at z=" + vec_to_string(z);
    o.require(r.f_l_kills_top, "(a)" + at);
    o.require(r.even_kernel_is_line, "(b) even E_i kernel has dim " + std::to_string(r.even_kernel_dim) + at);
    o.require(r.small_restriction_simple, "(c)" + at);
    o.require(r.generated_by_small, "(d)" + at);
  }
}

void c12(Outcome& o) {
  Algebra A(Shape(2, 1));
  int nontrivial = 0;
  for (IntVec z : {IntVec{4, 0, 0}, IntVec{3, 1, 0}, IntVec{5, 2, 1}, IntVec{6, 0, 2}}) {
    TensorTheoremReport r = tensor_theorem_report(A, z, 3);
    if (r.z2 != IntVec(3, 0)) ++nontrivial;
    o.require(r.characters_equal, "characters at z=" + vec_to_string(z));
  }
  o.require(nontrivial >= 3, "fewer than three weights with z'' != 0");
  for (IntVec zp : {IntVec{1, 0, 0}, IntVec{1, 1, 0}, IntVec{0, 0, 1}}) {
    FrobeniusTwistReport r = frobenius_twist_report(A, zp, 3);
    o.require(r.simple_generators_vanish && r.torus_trivial, "vanishing at z'=" + vec_to_string(zp));
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_s;
    void (*run)(Outcome&);
  };
  const std::vector<Criterion> all{
      {1, "relation suite", 60, c1},
      {2, "associativity fuzz", 300, c2},
      {3, "divided-power identities and the Kac formula", 0, c3},
      {4, "free-module oracle equivalence", 0, c4},
      {5, "Hopf structure", 0, c5},
      {6, "braid operators", 0, c6},
      {7, "PBW independence in Kac modules", 0, c7},
      {8, "module dimensions", 0, c8},
      {9, "typicality and simplicity", 0, c9},
      {10, "classical limit presentation", 0, c10},
      {11, "root of unity counts and restricted simples", 0, c11},
      {12, "tensor product theorem and Frobenius twist", 600, c12},
  };
  int failed = 0;
  for (const auto& c : all) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) o.require(false, "over time limit");
    if (!o.ok) ++failed;
    std::printf("%s criterion %2d: %s (%.1fs)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                o.ok ? "" : " -- ", o.note.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
