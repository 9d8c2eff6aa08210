#include "qsuper/braid.hpp"

namespace qsuper {

namespace {

void check_node(const Algebra& A, int i) {
  if (i < 1 || i >= A.N()) throw DomainError("braid index out of range");
  if (i == A.rd().m()) throw BraidAtOddNode("no braid operator at the odd node " + std::to_string(i));
}

MapSpec braid_spec(Algebra& A, int i, bool inverse) {
  check_node(A, i);
  MapSpec ms;
  const int qi = A.rd().qsign(i);
  ms.simple = [&A, i, qi, inverse](GenKind kind, int j) -> Element {
    Element gi = A.generator(kind, i, i + 1);
    if (j == i) {
      Element Ei = A.Esimple(i), Fi = A.Fsimple(i);
      if (!inverse)
        return kind == GenKind::E ? -A.multiply(Fi, A.Kalpha(i)) : -A.multiply(A.Kalpha(i, -1), Ei);
      return kind == GenKind::E ? -A.multiply(A.Kalpha(i, -1), Fi) : -A.multiply(Ei, A.Kalpha(i));
    }
    Element gj = A.generator(kind, j, j + 1);
    if (j != i - 1 && j != i + 1) return gj;
    // a_ij = -1; the inverse swaps the order of the two products
    bool ij_first = (kind == GenKind::E) != inverse;
    Element ij = A.multiply(gi, gj), ji = A.multiply(gj, gi);
    RatFunc c = RatFunc::q_pow(kind == GenKind::E ? -qi : qi);
    return ij_first ? ji.scaled(c) - ij : ij.scaled(c) - ji;
  };
  ms.kimage = [&A, i](const IntVec& mu) {
    IntVec nu = mu;
    std::swap(nu[i - 1], nu[i]);
    return A.k_monomial(nu);
  };
  return ms;
}

}  // namespace

Element braid_t(Algebra& A, int i, const Element& a) { return A.apply_map(a, braid_spec(A, i, false)); }

Element braid_t_inv(Algebra& A, int i, const Element& a) { return A.apply_map(a, braid_spec(A, i, true)); }

Element root_vector_via_braid(Algebra& A, GenKind kind, int i, int j, int k) {
  if (!(1 <= i && i <= k && k < j && j <= A.N())) throw DomainError("root_vector_via_braid needs i <= k < j");
  for (int s = i; s < j; ++s)
    if (s != k && s == A.rd().m()) throw BraidAtOddNode("braid chain passes the odd node");
  Element x = A.generator(kind, k, k + 1);
  for (int s = k + 1; s <= j - 1; ++s) x = braid_t_inv(A, s, x);
  for (int s = k - 1; s >= i; --s) x = braid_t(A, s, x);
  return (j - i - 1) % 2 ? -x : x;
}

}  // namespace qsuper
