#include "qsuper/rootdata.hpp"

namespace qsuper {

Shape::Shape(int m_, int n_) : m(m_), n(n_) {
  if (m < 1 || n < 1) throw DomainError("shape requires m,n >= 1");
}

std::string Shape::to_string() const { return std::to_string(m) + "," + std::to_string(n); }

RootData::RootData(Shape s) : shape_(s) {
  int N = s.m + s.n;
  rank_.assign(N + 1, std::vector<int>(N + 1, -1));
  for (int pass = 0; pass < 2; ++pass) {
    for (int i = 1; i <= N; ++i) {
      for (int j = i + 1; j <= N; ++j) {
        bool odd = parity(i, j);
        if (odd != (pass == 1)) continue;
        rank_[i][j] = static_cast<int>(roots_.size());
        roots_.push_back({i, j, odd});
      }
    }
    if (pass == 0) num_even_ = static_cast<int>(roots_.size());
  }
}

int RootData::rank_of(int i, int j) const {
  if (i < 1 || j > N() || i >= j) return -1;
  return rank_[i][j];
}

void RootData::check_weight(const IntVec& v) const {
  if (static_cast<int>(v.size()) != N())
    throw DomainError("weight has " + std::to_string(v.size()) + " entries, shape needs " + std::to_string(N()));
}

long RootData::bilinear(const IntVec& a, const IntVec& b) const {
  check_weight(a);
  check_weight(b);
  long s = 0;
  for (int k = 0; k < N(); ++k) s += qsign(k + 1) * a[k] * b[k];
  return s;
}

long RootData::pair_root(const IntVec& mu, int i, int j) const {
  return qsign(i) * mu[i - 1] - qsign(j) * mu[j - 1];
}

IntVec RootData::eps(int i) const {
  IntVec v(N(), 0);
  v[i - 1] = 1;
  return v;
}

IntVec RootData::root_vector(int i, int j) const {
  IntVec v(N(), 0);
  v[i - 1] += 1;
  v[j - 1] -= 1;
  return v;
}

IntVec RootData::two_rho() const {
  // 2rho0 = sum over even positive roots, 2rho1 = sum over odd positive roots
  IntVec r(N(), 0);
  for (const auto& rt : roots_) {
    long s = rt.odd ? -1 : 1;
    r[rt.i - 1] += s;
    r[rt.j - 1] -= s;
  }
  return r;
}

long RootData::c_value(int i, int j) const {
  if (!(1 <= i && i <= m() && m() < j && j <= N())) throw DomainError("c(i,j) needs an odd root");
  return i + j - 2L * m() - 1;
}

long RootData::p_factor(const IntVec& lambda) const {
  check_weight(lambda);
  IntVec tr = two_rho();
  IntVec twice(N());
  for (int k = 0; k < N(); ++k) twice[k] = 2 * lambda[k] + tr[k];
  long p = 1;
  for (const auto& rt : roots_) {
    if (!rt.odd) continue;
    long v2 = pair_root(twice, rt.i, rt.j);  // 2*(lambda+rho, alpha)
    if (v2 % 2 != 0) throw std::logic_error("odd pairing with 2(lambda+rho)");
    p *= v2 / 2;
  }
  return p;
}

bool RootData::is_typical(const IntVec& lambda) const {
  check_weight(lambda);
  bool by_c = true;
  for (const auto& rt : roots_)
    if (rt.odd && lambda[rt.i - 1] + lambda[rt.j - 1] == c_value(rt.i, rt.j)) by_c = false;
  bool by_p = p_factor(lambda) != 0;
  if (by_c != by_p) throw std::logic_error("typicality routes disagree");
  return by_c;
}

IntVec RootData::weight_to_z(const IntVec& lambda) const {
  check_weight(lambda);
  IntVec z(N());
  for (int i = 1; i < N(); ++i)
    z[i - 1] = i == m() ? lambda[i - 1] + lambda[i] : lambda[i - 1] - lambda[i];
  z[N() - 1] = lambda[N() - 1];
  return z;
}

IntVec RootData::z_to_weight(const IntVec& z) const {
  check_weight(z);
  IntVec lam(N());
  lam[N() - 1] = z[N() - 1];
  for (int i = N() - 1; i >= 1; --i)
    lam[i - 1] = i == m() ? z[i - 1] - lam[i] : z[i - 1] + lam[i];
  return lam;
}

bool RootData::in_Xplus(const IntVec& lambda) const {
  check_weight(lambda);
  for (int i = 1; i < N(); ++i)
    if (i != m() && lambda[i - 1] < lambda[i]) return false;
  return true;
}

bool RootData::in_Zplus(const IntVec& z) const {
  check_weight(z);
  for (int i = 1; i <= N(); ++i)
    if (constrained(i) && z[i - 1] < 0) return false;
  return true;
}

bool RootData::in_Xplus_l(const IntVec& z, long l) const {
  check_weight(z);
  for (int i = 1; i <= N(); ++i)
    if (constrained(i) && (z[i - 1] < 0 || z[i - 1] > l - 1)) return false;
  return true;
}

std::pair<IntVec, IntVec> RootData::frobenius_decompose(const IntVec& z, long l) const {
  if (!in_Zplus(z)) throw DomainError("frobenius_decompose needs z with nonnegative constrained entries");
  if (l < 1) throw DomainError("frobenius_decompose needs l >= 1");
  IntVec a(N()), b(N(), 0);
  for (int i = 1; i <= N(); ++i) {
    if (constrained(i)) {
      a[i - 1] = z[i - 1] % l;
      b[i - 1] = z[i - 1] / l;
    } else {
      a[i - 1] = z[i - 1];
    }
  }
  return {a, b};
}

int RootData::cartan(int i, int j) const {
  if (i < 1 || i > N() || j < 1 || j >= N()) throw DomainError("Cartan index out of range");
  if (i == N()) return j == N() - 1 ? -1 : 0;
  if (i == j) return i == m() ? 0 : 2;
  if (i == m() && j == m() + 1) return 1;
  if (i - j == 1 || j - i == 1) return -1;
  return 0;
}

IntVec RootData::alpha_z(int j) const { return weight_to_z(root_vector(j, j + 1)); }

long weyl_dimension_even(const Shape& s, const IntVec& lambda) {
  // prod_{i<j in a block} (l_i - l_j + j - i)/(j - i)
  auto block = [&](int lo, int hi) {
    long num = 1, den = 1;
    for (int i = lo; i <= hi; ++i)
      for (int j = i + 1; j <= hi; ++j) {
        num *= lambda[i - 1] - lambda[j - 1] + j - i;
        den *= j - i;
      }
    return num / den;
  };
  return block(1, s.m) * block(s.m + 1, s.m + s.n);
}

}  // namespace qsuper
