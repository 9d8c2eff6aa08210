#include "qsuper/module.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace qsuper {

std::string OpKey::to_string() const {
  std::string s = kind == GenKind::E ? "E" : "F";
  s += "[" + std::to_string(i) + "," + std::to_string(i + 1) + "]";
  if (power != 1) s += "^(" + std::to_string(power) + ")";
  return s;
}

template <>
RatFunc to_field<RatFunc>(const RatFunc& x, int) {
  return x;
}

template <>
CycloNum to_field<CycloNum>(const RatFunc& x, int order) {
  return evaluate_at_root(x, order);
}

// ---------------------------------------------------------------- WeightModule

template <class F>
int WeightModule<F>::add_basis(std::string label, IntVec weight, int parity) {
  rd_.check_weight(weight);
  labels_.push_back(std::move(label));
  weights_.push_back(std::move(weight));
  parities_.push_back(parity);
  return static_cast<int>(weights_.size()) - 1;
}

template <class F>
F WeightModule<F>::qpow(long e) const {
  if constexpr (std::is_same_v<F, RatFunc>) {
    return RatFunc::q_pow(static_cast<int>(e));
  } else {
    return CycloNum::eta(order_).pow(e);
  }
}

template <class F>
SVec<F> WeightModule<F>::apply(const OpKey& k, const Vec& v) const {
  auto it = ops_.find(k);
  if (it == ops_.end()) throw DomainError("module has no operator " + k.to_string());
  Vec out;
  for (const auto& [idx, c] : v) axpy(out, c, it->second[idx]);
  return out;
}

template <class F>
std::map<IntVec, std::vector<int>> WeightModule<F>::weight_spaces() const {
  std::map<IntVec, std::vector<int>> w;
  for (size_t i = 0; i < weights_.size(); ++i) w[weights_[i]].push_back(static_cast<int>(i));
  return w;
}

// ---------------------------------------------------------------- element action

template <class F>
SVec<F> act_root_vector(const WeightModule<F>& M, GenKind kind, int i, int j, const SVec<F>& v) {
  if (v.empty()) return v;
  if (j == i + 1) return M.apply(OpKey{kind, i, 1}, v);
  int c = i + 1;
  F qc = M.qpow(M.rd().qsign(c));
  auto X = [&](const SVec<F>& w) { return act_root_vector(M, kind, i, c, w); };
  auto Y = [&](const SVec<F>& w) { return act_root_vector(M, kind, c, j, w); };
  SVec<F> out;
  if (kind == GenKind::E) {
    // E_ij = E_ic E_cj - q_c^{-1} E_cj E_ic
    out = X(Y(v));
    axpy(out, -(F(1) / qc), Y(X(v)));
  } else {
    // F_ij = F_cj F_ic - q_c F_ic F_cj
    out = Y(X(v));
    axpy(out, -qc, X(Y(v)));
  }
  return out;
}

template <class F>
SVec<F> act_monomial(const WeightModule<F>& M, const Monomial& m, const SVec<F>& v) {
  const RootData& rd = M.rd();
  SVec<F> w = v;
  for (int r = rd.num_roots() - 1; r >= 0 && !w.empty(); --r)
    for (int t = 0; t < m.e(r); ++t) w = act_root_vector(M, GenKind::E, rd.root(r).i, rd.root(r).j, w);
  IntVec mu = m.kvec();
  for (auto& [idx, c] : w) c = c * M.k_eigen(mu, idx);
  for (int r = 0; r < rd.num_roots() && !w.empty(); ++r)
    for (int t = 0; t < m.f(r); ++t) w = act_root_vector(M, GenKind::F, rd.root(r).i, rd.root(r).j, w);
  return w;
}

template <class F>
SVec<F> act(const WeightModule<F>& M, const Element& a, const SVec<F>& v) {
  SVec<F> out;
  for (const auto& [m, c] : a.terms()) axpy(out, to_field<F>(c, M.order()), act_monomial(M, m, v));
  return out;
}

template <class F>
std::vector<std::string> relation_failures(const WeightModule<F>& M, const std::vector<Relation>& rels,
                                           const std::vector<int>& vectors) {
  std::vector<int> vs = vectors;
  if (vs.empty())
    for (size_t i = 0; i < M.dim(); ++i) vs.push_back(static_cast<int>(i));
  std::vector<std::string> bad;
  for (const auto& rel : rels) {
    bool ok = true;
    for (int idx : vs) {
      SVec<F> sum;
      for (const auto& t : rel.terms) {
        SVec<F> w = WeightModule<F>::unit(idx);
        for (auto it = t.factors.rbegin(); it != t.factors.rend() && !w.empty(); ++it) w = act(M, *it, w);
        axpy(sum, to_field<F>(t.coeff, M.order()), w);
      }
      if (!sum.empty()) {
        ok = false;
        break;
      }
    }
    if (!ok) bad.push_back(rel.name);
  }
  return bad;
}

// ---------------------------------------------------------------- submodules

template <class F>
std::vector<std::pair<IntVec, SVec<F>>> joint_kernel(const WeightModule<F>& M, const std::vector<OpKey>& ops) {
  std::vector<std::pair<IntVec, SVec<F>>> out;
  const int n = static_cast<int>(M.dim());
  for (const auto& [wt, idxs] : M.weight_spaces()) {
    std::vector<SVec<F>> cols;
    for (int idx : idxs) {
      SVec<F> col;
      for (size_t o = 0; o < ops.size(); ++o)
        for (const auto& [k, c] : M.op(ops[o])[idx]) col.emplace(static_cast<int>(o) * n + k, c);
      cols.push_back(std::move(col));
    }
    for (const auto& comb : kernel(cols)) {
      SVec<F> v;
      for (const auto& [j, c] : comb) v.emplace(idxs[j], c);
      out.emplace_back(wt, std::move(v));
    }
  }
  return out;
}

template <class F>
std::vector<std::pair<IntVec, SVec<F>>> singular_vectors(const WeightModule<F>& M) {
  std::vector<OpKey> raising;
  for (const auto& [k, m] : M.ops())
    if (k.kind == GenKind::E) raising.push_back(k);
  return joint_kernel(M, raising);
}

template <class F>
Echelon<F> submodule(const WeightModule<F>& M, const std::vector<SVec<F>>& gens, const std::vector<OpKey>& ops) {
  std::vector<OpKey> use = ops;
  if (use.empty())
    for (const auto& [k, m] : M.ops()) use.push_back(k);
  Echelon<F> S;
  std::deque<SVec<F>> todo;
  for (const auto& g : gens) {
    SVec<F> added;
    if (S.insert(g, &added)) todo.push_back(std::move(added));
  }
  while (!todo.empty()) {
    SVec<F> v = std::move(todo.front());
    todo.pop_front();
    for (const auto& k : use) {
      SVec<F> added;
      if (S.insert(M.apply(k, v), &added)) todo.push_back(std::move(added));
    }
  }
  return S;
}

template <class F>
WeightModule<F> quotient(const WeightModule<F>& M, const Echelon<F>& S) {
  WeightModule<F> Q(M.shape(), M.order());
  std::vector<int> newidx(M.dim(), -1);
  std::vector<int> kept;
  for (size_t i = 0; i < M.dim(); ++i) {
    if (S.is_pivot(static_cast<int>(i))) continue;
    newidx[i] = Q.add_basis(M.label(static_cast<int>(i)), M.weight(static_cast<int>(i)), M.parity(static_cast<int>(i)));
    kept.push_back(static_cast<int>(i));
  }
  for (const auto& [k, mat] : M.ops()) {
    typename WeightModule<F>::Matrix out(kept.size());
    for (size_t b = 0; b < kept.size(); ++b) {
      SVec<F> w = S.reduce(mat[kept[b]]);
      for (const auto& [idx, c] : w) out[b].emplace(newidx[idx], c);
    }
    Q.set_op(k, std::move(out));
  }
  if (M.top() >= 0) Q.set_top(newidx[M.top()]);
  return Q;
}

template <class F>
WeightModule<F> simple_head(const WeightModule<F>& M, bool check_generated) {
  if (M.top() < 0) throw NotHighestWeight("module has no distinguished highest weight vector");
  const IntVec top_wt = M.weight(M.top());
  if (M.weight_spaces().at(top_wt).size() != 1) throw NotHighestWeight("highest weight space is not one-dimensional");
  if (check_generated && submodule(M, {WeightModule<F>::unit(M.top())}).rank() != M.dim())
    throw NotHighestWeight("module is not generated by its top vector");
  WeightModule<F> cur = M;
  while (true) {
    std::vector<SVec<F>> gens;
    for (auto& [wt, v] : singular_vectors(cur))
      if (wt != top_wt) gens.push_back(std::move(v));
    if (gens.empty()) break;
    cur = quotient(cur, submodule(cur, gens));
  }
  return cur;
}

template <class F>
WeightModule<F> restrict_to(const WeightModule<F>& M, const Echelon<F>& S) {
  WeightModule<F> R(M.shape(), M.order());
  std::map<int, int> row_index;  // pivot -> new basis index
  for (const auto& [p, row] : S.rows()) {
    row_index[p] = R.add_basis("<" + M.label(p) + ">", M.weight(p), M.parity(p));
    if (p == M.top()) R.set_top(row_index[p]);
  }
  for (const auto& [k, mat] : M.ops()) {
    typename WeightModule<F>::Matrix out(R.dim());
    for (const auto& [p, row] : S.rows()) {
      SVec<F> w = M.apply(k, row);
      SVec<F>& col = out[row_index.at(p)];
      // rows start at their pivot, so peeling pivots in ascending order is exact
      auto it = w.begin();
      while (it != w.end()) {
        auto r = S.rows().find(it->first);
        if (r == S.rows().end()) throw std::logic_error("subspace is not invariant");
        F c = it->second;
        int piv = it->first;
        col.emplace(row_index.at(piv), c);
        axpy(w, -c, r->second);
        it = w.upper_bound(piv);
      }
    }
    R.set_op(k, std::move(out));
  }
  return R;
}

template <class F>
Character character(const WeightModule<F>& M) {
  Character ch;
  for (size_t i = 0; i < M.dim(); ++i) ++ch[M.z_weight(static_cast<int>(i))];
  return ch;
}

Character convolve(const Character& a, const Character& b) {
  Character out;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) {
      IntVec w(wa.size());
      for (size_t k = 0; k < w.size(); ++k) w[k] = wa[k] + wb[k];
      out[w] += ma * mb;
    }
  return out;
}

template <class F>
WeightModule<F> trivial_module(Shape s, int order) {
  WeightModule<F> M(s, order);
  M.add_basis("1", IntVec(s.m + s.n, 0), 0);
  M.set_top(0);
  for (int i = 1; i < s.m + s.n; ++i) {
    M.set_op({GenKind::E, i, 1}, typename WeightModule<F>::Matrix(1));
    M.set_op({GenKind::F, i, 1}, typename WeightModule<F>::Matrix(1));
  }
  return M;
}

template <class F>
WeightModule<F> tensor_module(const WeightModule<F>& M, const WeightModule<F>& N) {
  if (M.shape() != N.shape() || M.order() != N.order()) throw DomainError("tensor factors differ in shape or field");
  const RootData& rd = M.rd();
  WeightModule<F> T(M.shape(), M.order());
  const int dn = static_cast<int>(N.dim());
  for (size_t a = 0; a < M.dim(); ++a)
    for (size_t b = 0; b < N.dim(); ++b) {
      IntVec w = M.weight(static_cast<int>(a));
      for (size_t k = 0; k < w.size(); ++k) w[k] += N.weight(static_cast<int>(b))[k];
      T.add_basis("(" + M.label(static_cast<int>(a)) + ")x(" + N.label(static_cast<int>(b)) + ")", w,
                  (M.parity(static_cast<int>(a)) + N.parity(static_cast<int>(b))) % 2);
    }
  if (M.top() >= 0 && N.top() >= 0) T.set_top(M.top() * dn + N.top());
  // divided power of a simple generator on one leg; power 0 is the identity
  auto leg = [](const WeightModule<F>& X, GenKind kind, int i, int p, int idx) -> SVec<F> {
    if (p == 0) return WeightModule<F>::unit(idx);
    return X.op({kind, i, p})[idx];
  };
  for (const auto& [key, mat] : M.ops()) {
    if (!N.has_op(key)) continue;
    const int i = key.i, P = key.power;
    const int qi = rd.qsign(i);
    typename WeightModule<F>::Matrix out(T.dim());
    for (size_t a = 0; a < M.dim(); ++a)
      for (size_t b = 0; b < N.dim(); ++b) {
        SVec<F>& col = out[a * dn + b];
        const int pa = M.parity(static_cast<int>(a));
        for (int j = 0; j <= P; ++j) {
          // E^(P) -> sum_j q_i^{-j(P-j)} E^(j) (x) K^j E^(P-j)
          // F^(P) -> sum_j q_i^{j(P-j)} F^(P-j) K^{-j} (x) F^(j)
          SVec<F> x, y;
          F coef = M.qpow(static_cast<long>(key.kind == GenKind::E ? -qi : qi) * j * (P - j));
          if (key.kind == GenKind::E) {
            x = leg(M, GenKind::E, i, j, static_cast<int>(a));
            y = leg(N, GenKind::E, i, P - j, static_cast<int>(b));
            for (auto& [k, c] : y) c = c * N.kalpha_eigen(i, k).pow(j);
          } else {
            x = leg(M, GenKind::F, i, P - j, static_cast<int>(a));
            for (auto& [k, c] : x) c = c * (F(1) / M.kalpha_eigen(i, static_cast<int>(a))).pow(j);
            y = leg(N, GenKind::F, i, j, static_cast<int>(b));
          }
          // super sign: the second-leg factor passes x's original vector
          int second_odd = (rd.parity(i, i + 1) && (key.kind == GenKind::E ? P - j : j) % 2 == 1) ? 1 : 0;
          if (second_odd && pa) coef = -coef;
          for (const auto& [ka, ca] : x)
            for (const auto& [kb, cb] : y) {
              F v = coef * ca * cb;
              auto [it, fresh] = col.emplace(ka * dn + kb, v);
              if (!fresh) {
                it->second += v;
                if (it->second.is_zero()) col.erase(it);
              }
            }
        }
      }
    T.set_op(key, std::move(out));
  }
  return T;
}

WeightModule<CycloNum> specialize(const WeightModule<RatFunc>& M, int l) {
  require_odd_order(l);
  WeightModule<CycloNum> S(M.shape(), l);
  for (size_t i = 0; i < M.dim(); ++i)
    S.add_basis(M.label(static_cast<int>(i)), M.weight(static_cast<int>(i)), M.parity(static_cast<int>(i)));
  for (const auto& [k, mat] : M.ops()) {
    WeightModule<CycloNum>::Matrix out(mat.size());
    for (size_t b = 0; b < mat.size(); ++b)
      for (const auto& [idx, c] : mat[b]) {
        CycloNum v = evaluate_at_root(c, l);
        if (!v.is_zero()) out[b].emplace(idx, v);
      }
    S.set_op(k, std::move(out));
  }
  S.set_top(M.top());
  return S;
}

long height_of(const IntVec& lambda, const IntVec& mu) {
  long h = 0, prefix = 0;
  for (size_t k = 0; k + 1 < lambda.size(); ++k) {
    prefix += lambda[k] - mu[k];
    h += prefix;
  }
  return h;
}

// ---------------------------------------------------------------- free-module model

namespace {

using Word = std::vector<int>;

std::string word_label(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t k = 0; k < w.size(); ++k) s += (k ? "*" : "") + std::string("xi[") + std::to_string(w[k]) + "]";
  return s;
}

}  // namespace

int word_degree(const WeightModule<RatFunc>& verma, int idx) {
  const std::string& s = verma.label(idx);
  if (s == "1") return 0;
  return static_cast<int>(std::count(s.begin(), s.end(), '*')) + 1;
}

WeightModule<RatFunc> verma_model(const Shape& s, const IntVec& lambda, int depth) {
  if (depth < 1) throw DomainError("verma_model needs depth >= 1");
  RootData rd(s);
  rd.check_weight(lambda);
  const int N = rd.N(), m = rd.m();
  // all words by degree, with global indices
  std::vector<Word> words;
  std::map<Word, int> index;
  std::vector<std::vector<Word>> by_deg(depth + 1);
  by_deg[0].push_back({});
  for (int r = 1; r <= depth; ++r)
    for (const auto& w : by_deg[r - 1])
      for (int a = 1; a < N; ++a) {
        Word x = w;
        x.push_back(a);
        by_deg[r].push_back(x);
      }
  for (const auto& layer : by_deg)
    for (const auto& w : layer) {
      index[w] = static_cast<int>(words.size());
      words.push_back(w);
    }

  // generators of the ideal as word combinations
  using Comb = std::vector<std::pair<Word, RatFunc>>;
  const RatFunc qq = RatFunc::q_pow(1) + RatFunc::q_pow(-1);
  std::vector<Comb> phis;
  for (int i = 1; i < N; ++i)
    for (int j = 1; j < N; ++j) {
      if (i == j) continue;
      if (std::abs(i - j) == 1 && i != m)
        phis.push_back({{{i, i, j}, RatFunc(1)}, {{i, j, i}, -qq}, {{j, i, i}, RatFunc(1)}});
      else if (std::abs(i - j) > 1)
        phis.push_back({{{i, j}, RatFunc(1)}, {{j, i}, RatFunc(-1)}});
    }
  phis.push_back({{{m, m}, RatFunc(1)}});
  if (m >= 2 && N - m >= 2) {
    int a = m - 1, b = m + 1;
    phis.push_back({{{a, m, b, m}, RatFunc(1)},
                    {{m, a, m, b}, RatFunc(1)},
                    {{b, m, a, m}, RatFunc(1)},
                    {{m, b, m, a}, RatFunc(1)},
                    {{m, a, b, m}, -qq}});
  }
  Echelon<RatFunc> ideal;
  for (const auto& phi : phis) {
    const int p = static_cast<int>(phi.front().first.size());
    for (int r = p; r <= depth; ++r)
      for (int a = 0; a <= r - p; ++a)
        for (const auto& u1 : by_deg[a])
          for (const auto& u2 : by_deg[r - p - a]) {
            SVec<RatFunc> v;
            for (const auto& [w, c] : phi) {
              Word x = u1;
              x.insert(x.end(), w.begin(), w.end());
              x.insert(x.end(), u2.begin(), u2.end());
              axpy(v, c, SVec<RatFunc>{{index.at(x), RatFunc(1)}});
            }
            ideal.insert(v);
          }
  }

  WeightModule<RatFunc> M(s, 0);
  std::vector<int> newidx(words.size(), -1);
  for (size_t g = 0; g < words.size(); ++g) {
    if (ideal.is_pivot(static_cast<int>(g))) continue;
    IntVec wt = lambda;
    int par = 0;
    for (int a : words[g]) {
      wt[a - 1] -= 1;
      wt[a] += 1;
      if (a == m) ++par;
    }
    newidx[g] = M.add_basis(word_label(words[g]), wt, par % 2);
  }
  M.set_top(newidx[index.at({})]);
  auto residue = [&](const SVec<RatFunc>& v) {
    SVec<RatFunc> out;
    for (const auto& [g, c] : ideal.reduce(v)) out.emplace(newidx[g], c);
    return out;
  };
  for (int i = 1; i < N; ++i) {
    WeightModule<RatFunc>::Matrix Fm(M.dim()), Em(M.dim());
    const int qi = rd.qsign(i);
    const RatFunc den = RatFunc::q_pow(qi) - RatFunc::q_pow(-qi);
    const bool e_odd = rd.parity(i, i + 1);
    for (size_t g = 0; g < words.size(); ++g) {
      if (newidx[g] < 0) continue;
      const Word& w = words[g];
      if (static_cast<int>(w.size()) < depth) {
        Word x{i};
        x.insert(x.end(), w.begin(), w.end());
        Fm[newidx[g]] = residue({{index.at(x), RatFunc(1)}});
      }
      SVec<RatFunc> e;
      int odd_before = 0;
      for (size_t s2 = 0; s2 < w.size(); ++s2) {
        if (w[s2] == i) {
          IntVec mu = lambda;  // lambda minus the roots after position s2
          for (size_t t = s2 + 1; t < w.size(); ++t) {
            mu[w[t] - 1] -= 1;
            mu[w[t]] += 1;
          }
          long p = rd.pair_root(mu, i, i + 1);
          RatFunc c = (RatFunc::q_pow(static_cast<int>(p)) - RatFunc::q_pow(static_cast<int>(-p))) / den;
          if (e_odd && odd_before % 2) c = -c;
          Word x = w;
          x.erase(x.begin() + static_cast<long>(s2));
          axpy(e, c, SVec<RatFunc>{{index.at(x), RatFunc(1)}});
        }
        if (w[s2] == m) ++odd_before;
      }
      Em[newidx[g]] = residue(e);
    }
    M.set_op({GenKind::E, i, 1}, std::move(Em));
    M.set_op({GenKind::F, i, 1}, std::move(Fm));
  }
  return M;
}

// ---------------------------------------------------------------- even and Kac modules

namespace {

std::string fpart_label(const RootData& rd, const Monomial& m, bool divided) {
  std::string s;
  for (int r = rd.num_roots() - 1; r >= 0; --r) {
    if (!m.f(r)) continue;
    if (!s.empty()) s += "*";
    s += "F[" + std::to_string(rd.root(r).i) + "," + std::to_string(rd.root(r).j) + "]";
    if (m.f(r) > 1 || divided) s += divided ? "^(" + std::to_string(m.f(r)) + ")" : "^" + std::to_string(m.f(r));
  }
  return s;
}

void enumerate_psi(const RootData& rd, int r, long budget, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (r == rd.num_even()) {
    out.push_back(cur);
    return;
  }
  long h = rd.root(r).j - rd.root(r).i;
  for (int k = 0; k * h <= budget; ++k) {
    cur[r] = k;
    enumerate_psi(rd, r + 1, budget - k * h, cur, out);
  }
  cur[r] = 0;
}

std::vector<std::pair<OpKey, Element>> generator_elements(Algebra& A, bool even_only, int max_div) {
  std::vector<std::pair<OpKey, Element>> g;
  const RootData& rd = A.rd();
  for (int i = 1; i < A.N(); ++i) {
    bool odd = i == rd.m();
    if (odd && even_only) continue;
    for (GenKind k : {GenKind::E, GenKind::F}) {
      g.emplace_back(OpKey{k, i, 1}, A.generator(k, i, i + 1));
      if (!odd)
        for (int p = 2; p <= max_div; ++p) g.emplace_back(OpKey{k, i, p}, A.divided_power(k, i, i + 1, p));
    }
  }
  return g;
}

}  // namespace

WeightModule<RatFunc> even_verma(Algebra& A, const IntVec& lambda, int D, int max_div) {
  const RootData& rd = A.rd();
  rd.check_weight(lambda);
  std::vector<std::vector<int>> psis;
  std::vector<int> cur(rd.num_even(), 0);
  enumerate_psi(rd, 0, D, cur, psis);
  std::sort(psis.begin(), psis.end(), [&](const auto& a, const auto& b) {
    long ha = 0, hb = 0;
    for (int r = 0; r < rd.num_even(); ++r) {
      ha += a[r] * (rd.root(r).j - rd.root(r).i);
      hb += b[r] * (rd.root(r).j - rd.root(r).i);
    }
    return ha != hb ? ha < hb : a < b;
  });
  std::map<std::vector<int>, int> index;
  WeightModule<RatFunc> M(A.shape(), 0);
  std::vector<Monomial> monos;
  for (const auto& psi : psis) {
    Monomial mono = A.identity_monomial();
    IntVec wt = lambda;
    for (int r = 0; r < rd.num_even(); ++r) {
      mono.f(r) = psi[r];
      wt[rd.root(r).i - 1] -= psi[r];
      wt[rd.root(r).j - 1] += psi[r];
    }
    std::string lab = fpart_label(rd, mono, true);
    index[psi] = M.add_basis(lab.empty() ? "v" : lab + "*v", wt, 0);
    monos.push_back(mono);
  }
  M.set_top(index.at(std::vector<int>(rd.num_even(), 0)));
  auto fact = [&](const Monomial& mono) {
    LaurentInt f(1);
    for (int r = 0; r < rd.num_even(); ++r) f *= gauss_factorial(mono.f(r), rd.qsign(rd.root(r).i));
    return RatFunc(f);
  };
  for (const auto& [key, g] : generator_elements(A, true, max_div)) {
    WeightModule<RatFunc>::Matrix mat(M.dim());
    for (size_t b = 0; b < monos.size(); ++b) {
      Element x = A.multiply(g, A.from_monomial(monos[b], RatFunc(1) / fact(monos[b])));
      for (const auto& [m, c] : x.terms()) {
        if (m.has_e()) continue;
        std::vector<int> psi(rd.num_even());
        long h = 0;
        for (int r = 0; r < rd.num_even(); ++r) {
          psi[r] = m.f(r);
          h += psi[r] * (rd.root(r).j - rd.root(r).i);
        }
        if (h > D) continue;
        RatFunc v = c * RatFunc::q_pow(static_cast<int>(rd.bilinear(m.kvec(), lambda))) * fact(m);
        axpy(mat[b], v, SVec<RatFunc>{{index.at(psi), RatFunc(1)}});
      }
    }
    M.set_op(key, std::move(mat));
  }
  return M;
}

WeightModule<RatFunc> simple_even_module(Algebra& A, const IntVec& lambda, int max_div) {
  const RootData& rd = A.rd();
  rd.check_weight(lambda);
  if (!rd.in_Xplus(lambda)) throw NonDominant("weight is not dominant for the even part");
  const long target = weyl_dimension_even(A.shape(), lambda);
  for (int D = 2; D <= 256; D *= 2) {
    WeightModule<RatFunc> L = simple_head(even_verma(A, lambda, D, max_div), false);
    bool top_layer = false;
    for (size_t i = 0; i < L.dim(); ++i)
      if (height_of(lambda, L.weight(static_cast<int>(i))) == D) top_layer = true;
    if (!top_layer && static_cast<long>(L.dim()) == target) return L;
  }
  throw std::logic_error("even simple module did not stabilize");
}

WeightModule<RatFunc> kac_module(Algebra& A, const IntVec& lambda, int max_div) {
  const RootData& rd = A.rd();
  WeightModule<RatFunc> L0 = simple_even_module(A, lambda, max_div);
  const int d0 = static_cast<int>(L0.dim());
  const int first_odd = rd.num_even(), nodd = rd.num_odd();
  WeightModule<RatFunc> K(A.shape(), 0);
  std::vector<Monomial> fd(1 << nodd, A.identity_monomial());
  for (int mask = 0; mask < (1 << nodd); ++mask) {
    IntVec shift(A.N(), 0);
    for (int t = 0; t < nodd; ++t)
      if (mask >> t & 1) {
        fd[mask].f(first_odd + t) = 1;
        shift[rd.root(first_odd + t).i - 1] -= 1;
        shift[rd.root(first_odd + t).j - 1] += 1;
      }
    std::string pre = fpart_label(rd, fd[mask], false);
    for (int b = 0; b < d0; ++b) {
      IntVec wt = L0.weight(b);
      for (int k = 0; k < A.N(); ++k) wt[k] += shift[k];
      K.add_basis(pre.empty() ? L0.label(b) : pre + "*" + L0.label(b), wt, __builtin_popcount(mask) % 2);
    }
  }
  K.set_top(L0.top());
  for (const auto& [key, g] : generator_elements(A, false, max_div)) {
    WeightModule<RatFunc>::Matrix mat(K.dim());
    for (int mask = 0; mask < (1 << nodd); ++mask) {
      Element x = A.multiply(g, A.from_monomial(fd[mask]));
      for (const auto& [m, c] : x.terms()) {
        bool raises_odd = false;
        int nmask = 0;
        Monomial even = m;
        for (int t = 0; t < nodd; ++t) {
          if (m.e(first_odd + t)) raises_odd = true;
          if (m.f(first_odd + t)) nmask |= 1 << t;
          even.f(first_odd + t) = 0;
        }
        if (raises_odd) continue;
        for (int b = 0; b < d0; ++b) {
          SVec<RatFunc> w = act_monomial(L0, even, WeightModule<RatFunc>::unit(b));
          for (const auto& [k, v] : w) axpy(mat[mask * d0 + b], c * v, SVec<RatFunc>{{nmask * d0 + k, RatFunc(1)}});
        }
      }
    }
    K.set_op(key, std::move(mat));
  }
  return K;
}

// ---------------------------------------------------------------- instantiations

#define QSUPER_INSTANTIATE(F)                                                                                    \
  template class WeightModule<F>;                                                                                \
  template SVec<F> act(const WeightModule<F>&, const Element&, const SVec<F>&);                                  \
  template SVec<F> act_monomial(const WeightModule<F>&, const Monomial&, const SVec<F>&);                        \
  template SVec<F> act_root_vector(const WeightModule<F>&, GenKind, int, int, const SVec<F>&);                   \
  template std::vector<std::string> relation_failures(const WeightModule<F>&, const std::vector<Relation>&,      \
                                                      const std::vector<int>&);                                  \
  template std::vector<std::pair<IntVec, SVec<F>>> joint_kernel(const WeightModule<F>&, const std::vector<OpKey>&); \
  template std::vector<std::pair<IntVec, SVec<F>>> singular_vectors(const WeightModule<F>&);                     \
  template Echelon<F> submodule(const WeightModule<F>&, const std::vector<SVec<F>>&, const std::vector<OpKey>&); \
  template WeightModule<F> quotient(const WeightModule<F>&, const Echelon<F>&);                                  \
  template WeightModule<F> simple_head(const WeightModule<F>&, bool);                                            \
  template WeightModule<F> restrict_to(const WeightModule<F>&, const Echelon<F>&);                               \
  template Character character(const WeightModule<F>&);                                                          \
  template WeightModule<F> tensor_module(const WeightModule<F>&, const WeightModule<F>&);                        \
  template WeightModule<F> trivial_module<F>(Shape, int);

QSUPER_INSTANTIATE(RatFunc)
QSUPER_INSTANTIATE(CycloNum)

}  // namespace qsuper
