#include "qsuper/rootofunity.hpp"

#include <tuple>

namespace qsuper {

SpecializedElement specialize_element(const Algebra& A, const Element& a, int l) {
  require_odd_order(l);
  SpecializedElement out{A.shape(), l, {}};
  for (const auto& [key, c] : A.a_form_coords(a)) {
    CycloNum v = evaluate_at_root(c, l);
    if (!v.is_zero()) out.terms.emplace(key, v);
  }
  return out;
}

namespace {

// Number of integer tuples with the given per-coordinate ranges, counted one by one.
long enumerate_boxes(const std::vector<int>& ranges) {
  std::vector<int> cur(ranges.size(), 0);
  long count = 0;
  while (true) {
    ++count;
    size_t k = 0;
    while (k < cur.size() && ++cur[k] == ranges[k]) cur[k++] = 0;
    if (k == cur.size()) break;
  }
  return count;
}

}  // namespace

SmallGroupCounts small_group_counts(const Shape& s, int l) {
  require_odd_order(l);
  RootData rd(s);
  std::vector<int> plus;  // psi' over I_0 then d' over I_1
  for (int r = 0; r < rd.num_roots(); ++r) plus.push_back(rd.root(r).odd ? 2 : l);
  SmallGroupCounts c;
  c.u_plus = enumerate_boxes(plus);
  c.u_zero = enumerate_boxes(std::vector<int>(rd.N(), 2 * l));
  c.tilde_zero = enumerate_boxes(std::vector<int>(rd.N(), l));
  const long u_minus = enumerate_boxes(plus);  // F-part has the same shape as the E-part
  c.u = u_minus * c.u_zero * c.u_plus;
  c.tilde_u = u_minus * c.tilde_zero * c.u_plus;
  return c;
}

WeightModule<CycloNum> specialize_kac(Algebra& A, const IntVec& lambda, int l) {
  require_odd_order(l);
  return specialize(kac_module(A, lambda, l), l);
}

WeightModule<CycloNum> simple_at_root(Algebra& A, const IntVec& z, int l) {
  const RootData& rd = A.rd();
  if (!rd.in_Zplus(z)) throw NonDominant("z has a negative constrained entry");
  WeightModule<CycloNum> K = specialize_kac(A, rd.z_to_weight(z), l);
  Echelon<CycloNum> S = submodule(K, {K.unit(K.top())});
  if (S.rank() == K.dim()) return simple_head(K, false);
  return simple_head(restrict_to(K, S), false);
}

WeightModule<CycloNum> restricted_simple(Algebra& A, const IntVec& z, int l) {
  require_odd_order(l);
  if (!A.rd().in_Xplus_l(z, l)) throw OutOfRestrictedRange("z is outside the restricted range");
  return simple_at_root(A, z, l);
}

// ---------------------------------------------------------------- classical limit

bool vanishes_classically(const Algebra& A, const Element& d) {
  std::map<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>, BigInt> grouped;
  for (const auto& [key, c] : A.a_form_coords(d)) grouped[{key.f, key.t, key.e}] += c.eval_at_one();
  for (const auto& [k, v] : grouped)
    if (v != 0) return false;
  return true;
}

std::vector<ClassicalInstance> classical_limit_check(Algebra& A) {
  const RootData& rd = A.rd();
  const int N = A.N(), m = rd.m();
  std::vector<ClassicalInstance> out;
  auto e = [&](int i) { return A.Esimple(i); };
  auto f = [&](int i) { return A.Fsimple(i); };
  auto h = [&](int i) { return A.kbracket_element(i, 0, 1); };
  auto ij = [](int i, int j) { return std::to_string(i) + "," + std::to_string(j); };
  auto check = [&](const std::string& fam, const std::string& name, const Element& d, bool counted = true) {
    out.push_back({fam, name, vanishes_classically(A, d), counted});
  };
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) check("a1", "h" + ij(i, j), A.commutator(h(i), h(j), false));
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j < N; ++j) {
      RatFunc a(rd.cartan(i, j));
      check("a2", "he" + ij(i, j), A.commutator(h(i), e(j), false) - e(j).scaled(a));
      check("a2", "hf" + ij(i, j), A.commutator(h(i), f(j), false) + f(j).scaled(a));
    }
  for (int i = 1; i < N; ++i)
    for (int j = 1; j < N; ++j) {
      Element rhs = i == j ? h(i) : A.zero();
      // super bracket: the anticommutator only between the two odd generators
      check("a3", "ef" + ij(i, j), A.commutator(e(i), f(j), true) - rhs);
      if (i == m && j != m)
        check("a3-printed-sign", "ef" + ij(i, j), A.multiply(e(i), f(j)) + A.multiply(f(j), e(i)), false);
    }
  for (int i = 1; i < N; ++i)
    for (int j = 1; j < N; ++j) {
      if (std::abs(i - j) <= 1) continue;
      check("a4", "ee" + ij(i, j), A.commutator(e(i), e(j), false));
      check("a4", "ff" + ij(i, j), A.commutator(f(i), f(j), false));
    }
  for (int i = 1; i < N; ++i)
    for (int j = 1; j < N; ++j) {
      if (std::abs(i - j) != 1 || i == m) continue;
      auto serre = [&](const Element& x, const Element& y) {
        return A.product({x, x, y}) - A.product({x, y, x}).scaled(RatFunc(2)) + A.product({y, x, x});
      };
      check("a5", "e" + ij(i, j), serre(e(i), e(j)));
      check("a6", "f" + ij(i, j), serre(f(i), f(j)));
    }
  check("a7", "e", A.multiply(e(m), e(m)));
  check("a7", "f", A.multiply(f(m), f(m)));
  if (m >= 2 && N - m >= 2) {
    auto br = [&](const Element& x, const Element& y) { return A.commutator(x, y, true); };
    check("a8", "e", br(e(m), br(e(m - 1), br(e(m), e(m + 1)))));
    check("a8", "f", br(f(m), br(f(m - 1), br(f(m), f(m + 1)))));
  }
  return out;
}

// ---------------------------------------------------------------- restricted modules

namespace {

std::vector<OpKey> ops_where(const WeightModule<CycloNum>& M, const std::function<bool(const OpKey&)>& keep) {
  std::vector<OpKey> v;
  for (const auto& [k, mat] : M.ops())
    if (keep(k)) v.push_back(k);
  return v;
}

bool all_zero(const WeightModule<CycloNum>::Matrix& mat) {
  for (const auto& col : mat)
    if (!col.empty()) return false;
  return true;
}

}  // namespace

RestrictedReport restricted_report(Algebra& A, const IntVec& z, int l) {
  const int m = A.rd().m();
  WeightModule<CycloNum> L = restricted_simple(A, z, l);
  RestrictedReport r;
  r.z = z;
  r.dim = static_cast<long>(L.dim());
  const SVec<CycloNum> x = L.unit(L.top());
  r.f_l_kills_top = true;
  for (int i = 1; i < A.N(); ++i)
    if (i != m && !L.apply({GenKind::F, i, l}, x).empty()) r.f_l_kills_top = false;
  auto even_e = ops_where(L, [&](const OpKey& k) { return k.kind == GenKind::E && k.power == 1 && k.i != m; });
  auto all_e = ops_where(L, [&](const OpKey& k) { return k.kind == GenKind::E && k.power == 1; });
  r.even_kernel_dim = static_cast<long>(joint_kernel(L, even_e).size());
  r.even_kernel_is_line = r.even_kernel_dim == 1;
  r.full_kernel_dim = static_cast<long>(joint_kernel(L, all_e).size());
  auto small = ops_where(L, [&](const OpKey& k) { return k.power < l; });
  r.generated_by_small = submodule(L, {x}, small).rank() == L.dim();
  // every nonzero submodule holds a vector killed by all E_i; a single such line
  // that generates everything leaves no room for a proper one
  r.small_restriction_simple = r.generated_by_small && r.full_kernel_dim == 1;
  return r;
}

TensorTheoremReport tensor_theorem_report(Algebra& A, const IntVec& z, int l) {
  const RootData& rd = A.rd();
  TensorTheoremReport r;
  r.z = z;
  std::tie(r.z1, r.z2) = rd.frobenius_decompose(z, l);
  IntVec lz2 = r.z2;
  for (auto& v : lz2) v *= l;
  WeightModule<CycloNum> Lz = simple_at_root(A, z, l);
  WeightModule<CycloNum> L1 = restricted_simple(A, r.z1, l);
  WeightModule<CycloNum> L2 = simple_at_root(A, lz2, l);
  r.dim = static_cast<long>(Lz.dim());
  r.characters_equal = character(Lz) == convolve(character(L1), character(L2));
  WeightModule<CycloNum> T = tensor_module(L1, L2);
  r.dim_tensor = static_cast<long>(T.dim());
  // a simple highest-weight module of weight z is L(z)
  r.tensor_simple = T.z_weight(T.top()) == z && simple_head(T).dim() == T.dim();
  return r;
}

FrobeniusTwistReport frobenius_twist_report(Algebra& A, const IntVec& zprime, int l) {
  const RootData& rd = A.rd();
  FrobeniusTwistReport r;
  r.z = zprime;
  IntVec z = zprime;
  for (auto& v : z) v *= l;
  WeightModule<CycloNum> L = simple_at_root(A, z, l);
  r.dim = static_cast<long>(L.dim());
  r.weyl = weyl_dimension_even(A.shape(), rd.z_to_weight(zprime));
  r.simple_generators_vanish = true;
  for (const auto& [k, mat] : L.ops())
    if (k.power == 1 && !all_zero(mat)) r.simple_generators_vanish = false;
  r.torus_trivial = true;
  for (size_t idx = 0; idx < L.dim(); ++idx) {
    for (int i = 1; i < A.N(); ++i)
      if (L.kalpha_eigen(i, static_cast<int>(idx)) != CycloNum(1)) r.torus_trivial = false;
    if (L.k_eigen(rd.eps(A.N()), static_cast<int>(idx)) != CycloNum(1)) r.torus_trivial = false;
  }
  auto divided = ops_where(L, [&](const OpKey& k) { return k.power == l; });
  r.generated_by_divided = submodule(L, {L.unit(L.top())}, divided).rank() == L.dim();
  return r;
}

}  // namespace qsuper
