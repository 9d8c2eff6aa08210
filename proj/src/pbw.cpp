#include "qsuper/pbw.hpp"

#include <algorithm>
#include <unordered_set>

namespace qsuper {

namespace {

LaurentInt q_minus_one() { return LaurentInt::q_pow(1) - LaurentInt(1); }
LaurentInt q_plus_one() { return LaurentInt::q_pow(1) + LaurentInt(1); }

LaurentInt lpow(const LaurentInt& b, int e) {
  LaurentInt r(1);
  for (int k = 0; k < e; ++k) r *= b;
  return r;
}

size_t hash_ints(const std::vector<int>& v, size_t seed = 0) {
  size_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  for (int x : v) h = (h ^ static_cast<size_t>(x + 0x51ed27)) * 0x100000001b3ULL;
  return h;
}

}  // namespace

// ---------------------------------------------------------------- FracCoef

FracCoef::FracCoef(LaurentInt num, int a, int b) : num_(std::move(num)), a_(a), b_(b) { reduce(); }

void FracCoef::reduce() {
  if (num_.is_zero()) {
    a_ = b_ = 0;
    return;
  }
  while (a_ > 0 && sgn(num_.eval_at_one()) == 0) {
    num_ = *num_.divexact(q_minus_one());
    --a_;
  }
  while (b_ > 0 && sgn(num_.eval_at_minus_one()) == 0) {
    num_ = *num_.divexact(q_plus_one());
    --b_;
  }
}

FracCoef FracCoef::inv_q_minus_qinv() { return FracCoef(LaurentInt::q_pow(1), 1, 1); }

std::optional<FracCoef> FracCoef::from_rat(const RatFunc& r) {
  if (r.is_zero()) return FracCoef();
  QPoly den = r.den();
  int k = den.low_degree();
  den = den.shifted_down(k);
  int a = 0, b = 0;
  QPoly quo, rem;
  const QPoly qm1(std::vector<Rational>{-1, 1});
  const QPoly qp1(std::vector<Rational>{1, 1});
  while (den.degree() > 0 && sgn(den.eval(1)) == 0) {
    QPoly::divmod(den, qm1, quo, rem);
    den = quo;
    ++a;
  }
  while (den.degree() > 0 && sgn(den.eval(-1)) == 0) {
    QPoly::divmod(den, qp1, quo, rem);
    den = quo;
    ++b;
  }
  if (den.degree() != 0 || den.lead() != 1) return std::nullopt;
  std::map<int, BigInt> t;
  const auto& c = r.num().coeffs();
  for (size_t d = 0; d < c.size(); ++d) {
    if (sgn(c[d]) == 0) continue;
    if (c[d].get_den() != 1) return std::nullopt;
    t[static_cast<int>(d) - k] = c[d].get_num();
  }
  return FracCoef(LaurentInt::from_terms(t), a, b);
}

RatFunc FracCoef::to_rat() const {
  if (a_ == 0 && b_ == 0) return RatFunc(num_);
  int low = num_.min_exp();
  std::vector<Rational> nv;
  for (int e = low; e <= num_.max_exp(); ++e) nv.emplace_back(num_.coeff(e));
  QPoly num(std::move(nv));
  QPoly den = QPoly::constant(1);
  for (int k = 0; k < a_; ++k) den = den * QPoly(std::vector<Rational>{-1, 1});
  for (int k = 0; k < b_; ++k) den = den * QPoly(std::vector<Rational>{1, 1});
  if (low >= 0) num = num.shifted_up(low);
  else den = den.shifted_up(-low);
  return RatFunc(num, den);
}

FracCoef FracCoef::operator-() const {
  FracCoef r = *this;
  r.num_ = -r.num_;
  return r;
}

FracCoef FracCoef::operator+(const FracCoef& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int A = std::max(a_, o.a_), B = std::max(b_, o.b_);
  LaurentInt n1 = num_, n2 = o.num_;
  if (A > a_) n1 *= lpow(q_minus_one(), A - a_);
  if (B > b_) n1 *= lpow(q_plus_one(), B - b_);
  if (A > o.a_) n2 *= lpow(q_minus_one(), A - o.a_);
  if (B > o.b_) n2 *= lpow(q_plus_one(), B - o.b_);
  return FracCoef(n1 + n2, A, B);
}

FracCoef FracCoef::operator*(const FracCoef& o) const {
  if (is_zero() || o.is_zero()) return {};
  return FracCoef(num_ * o.num_, a_ + o.a_, b_ + o.b_);
}

FracCoef FracCoef::bar() const {
  LaurentInt n = num_.bar().shifted(a_ + b_);
  if (a_ % 2 != 0) n = -n;
  return FracCoef(n, a_, b_);
}

// ---------------------------------------------------------------- Monomial / Element

IntVec Monomial::kvec() const {
  IntVec mu(N_);
  for (int j = 0; j < N_; ++j) mu[j] = k(j);
  return mu;
}

void Monomial::set_k(const IntVec& mu) {
  for (int j = 0; j < N_; ++j) k(j) = static_cast<int>(mu[j]);
}

bool Monomial::has_e() const {
  for (int r = 0; r < R_; ++r)
    if (e(r) != 0) return true;
  return false;
}

bool Monomial::has_f() const {
  for (int r = 0; r < R_; ++r)
    if (f(r) != 0) return true;
  return false;
}

bool Monomial::is_identity() const {
  return std::all_of(v_.begin(), v_.end(), [](int x) { return x == 0; });
}

size_t MonomialHash::operator()(const Monomial& m) const { return hash_ints(m.raw()); }

void Element::add_term(const Monomial& m, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

RatFunc Element::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RatFunc() : it->second;
}

Element& Element::operator+=(const Element& o) {
  if (o.shape_ != shape_) throw DomainError("shape mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (o.shape_ != shape_) throw DomainError("shape mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  r += o;
  return r;
}

Element Element::operator-(const Element& o) const {
  Element r = *this;
  r -= o;
  return r;
}

Element Element::operator-() const { return scaled(RatFunc(-1)); }

Element Element::scaled(const RatFunc& c) const {
  Element r(shape_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

bool AFormKey::operator<(const AFormKey& o) const {
  return std::tie(f, delta, t, e) < std::tie(o.f, o.delta, o.t, o.e);
}

bool AFormKey::operator==(const AFormKey& o) const {
  return f == o.f && delta == o.delta && t == o.t && e == o.e;
}

// ---------------------------------------------------------------- Algebra basics

size_t Algebra::EVecHash::operator()(const EVec& v) const { return hash_ints(v); }

size_t Algebra::PairKeyHash::operator()(const std::pair<Monomial, Monomial>& p) const {
  return hash_ints(p.second.raw(), hash_ints(p.first.raw()));
}

size_t Algebra::AtomKeyHash::operator()(const std::pair<int, Monomial>& p) const {
  return hash_ints(p.second.raw(), static_cast<size_t>(p.first) * 7919U);
}

Algebra::Algebra(Shape s) : rd_(s) {}

IntVec Algebra::scaled_vec(IntVec v, long s) {
  for (auto& x : v) x *= s;
  return v;
}

Element Algebra::one() const { return from_monomial(identity_monomial()); }

Element Algebra::scalar(const RatFunc& c) const { return from_monomial(identity_monomial(), c); }

Element Algebra::from_monomial(const Monomial& m, const RatFunc& c) const {
  Element r(shape());
  r.add_term(m, c);
  return r;
}

Element Algebra::generator(GenKind kind, int i, int j) const {
  int r = rd_.rank_of(i, j);
  if (r < 0)
    throw DomainError("no root vector with indices (" + std::to_string(i) + "," + std::to_string(j) +
                      ") in gl(" + shape().to_string() + ")");
  return from_monomial(kind == GenKind::E ? e_atom(r) : f_atom(r));
}

Monomial Algebra::e_atom(int r) const {
  Monomial m = identity_monomial();
  m.e(r) = 1;
  return m;
}

Monomial Algebra::f_atom(int r) const {
  Monomial m = identity_monomial();
  m.f(r) = 1;
  return m;
}

Element Algebra::k_monomial(const IntVec& mu) const {
  rd_.check_weight(mu);
  Monomial m = identity_monomial();
  m.set_k(mu);
  return from_monomial(m);
}

Element Algebra::K(int j, int power) const {
  if (j < 1 || j > N()) throw DomainError("K index out of range");
  IntVec mu(N(), 0);
  mu[j - 1] = power;
  return k_monomial(mu);
}

IntVec Algebra::k_alpha_vec(int i) const {
  if (i < 1 || i > N()) throw DomainError("K_alpha index out of range");
  IntVec mu(N(), 0);
  mu[i - 1] = 1;
  if (i < N()) mu[i] = -1;
  return mu;
}

Element Algebra::divided_power(GenKind kind, int i, int j, int n) const {
  if (n < 0) throw DomainError("negative divided power");
  int r = rd_.rank_of(i, j);
  if (r < 0) throw DomainError("bad root indices");
  if (rd_.root(r).odd && n >= 2) throw DomainError("odd root vector squares to zero (OddPowerTooHigh)");
  Monomial m = identity_monomial();
  if (kind == GenKind::E) m.e(r) = n;
  else m.f(r) = n;
  return from_monomial(m, RatFunc(1) / RatFunc(gauss_factorial(n)));
}

namespace {

using XPoly = std::map<int, RatFunc>;  // Laurent polynomial in K_alpha with Q(q) coefficients

XPoly bracket_poly(long c, long t, int sign) {
  XPoly p{{0, RatFunc(1)}};
  for (long s = 1; s <= t; ++s) {
    RatFunc den = RatFunc(LaurentInt::q_pow(static_cast<int>(sign * s)) - LaurentInt::q_pow(static_cast<int>(-sign * s)));
    RatFunc up = RatFunc::q_pow(static_cast<int>(sign * (c - s + 1))) / den;
    RatFunc down = -RatFunc::q_pow(static_cast<int>(-sign * (c - s + 1))) / den;
    XPoly next;
    for (const auto& [d, v] : p) {
      next[d + 1] += v * up;
      next[d - 1] += v * down;
    }
    p.clear();
    for (auto& [d, v] : next)
      if (!v.is_zero()) p.emplace(d, v);
  }
  return p;
}

int size_of_degree(int d) { return d > 0 ? 2 * d - 1 : -2 * d; }

}  // namespace

Element Algebra::kbracket_element(int i, long c, long t) const {
  if (i < 1 || i > N()) throw DomainError("bracket index out of range");
  if (t < 0) throw DomainError("bracket needs t >= 0");
  Element r(shape());
  IntVec a = k_alpha_vec(i);
  for (const auto& [d, v] : bracket_poly(c, t, rd_.qsign(i))) {
    Monomial m = identity_monomial();
    m.set_k(scaled_vec(a, d));
    r.add_term(m, v);
  }
  return r;
}

std::vector<std::tuple<int, int, RatFunc>> Algebra::k_power_coords(int a, int sign) const {
  std::vector<std::tuple<int, int, RatFunc>> out;
  XPoly p{{a, RatFunc(1)}};
  while (!p.empty()) {
    int best = p.begin()->first;
    for (const auto& [d, v] : p)
      if (size_of_degree(d) > size_of_degree(best)) best = d;
    int k = size_of_degree(best);
    int delta = k % 2;
    int t = (k - delta) / 2;
    XPoly b;
    for (const auto& [d, v] : bracket_poly(0, t, sign)) b[d + delta] = v;
    RatFunc ratio = p[best] / b.at(best);
    out.emplace_back(delta, t, ratio);
    for (const auto& [d, v] : b) {
      RatFunc nv = p[d] - ratio * v;
      if (nv.is_zero()) p.erase(d);
      else p[d] = nv;
    }
  }
  return out;
}

int Algebra::parity(const Monomial& m) const {
  int p = 0;
  for (int r = rd_.num_even(); r < R(); ++r) p += m.f(r) + m.e(r);
  return p % 2;
}

IntVec Algebra::weight(const Monomial& m) const {
  IntVec w(N(), 0);
  for (int r = 0; r < R(); ++r) {
    int x = m.e(r) - m.f(r);
    if (x == 0) continue;
    w[rd_.root(r).i - 1] += x;
    w[rd_.root(r).j - 1] -= x;
  }
  return w;
}

int Algebra::parity(const Element& a) const {
  int p = -2;
  for (const auto& [m, c] : a.terms()) {
    int q = parity(m);
    if (p == -2) p = q;
    else if (p != q) return -1;
  }
  return p == -2 ? 0 : p;
}

IntVec Algebra::evec_weight(const EVec& v) const {
  IntVec w(N(), 0);
  for (int r = 0; r < R(); ++r) {
    if (v[r] == 0) continue;
    w[rd_.root(r).i - 1] += v[r];
    w[rd_.root(r).j - 1] -= v[r];
  }
  return w;
}

long Algebra::pair_mu(const IntVec& mu, const IntVec& beta) const {
  long s = 0;
  for (int t = 0; t < N(); ++t) s += rd_.qsign(t + 1) * mu[t] * beta[t];
  return s;
}

size_t Algebra::cache_size() const {
  return e_insert_memo_.size() + mono_memo_.size() + eatom_memo_.size() + cross_memo_.size();
}

// ---------------------------------------------------------------- E-side straightening

// Rewrite E_y E_x (y after x in the order) as a combination of words.
std::vector<std::pair<LaurentInt, std::vector<int>>> Algebra::swap_e(int y, int x) const {
  const Root& Y = rd_.root(y);
  const Root& X = rd_.root(x);
  int a = Y.i, b = Y.j, c = X.i, d = X.j;
  LaurentInt sigma = (Y.odd && X.odd) ? LaurentInt(-1) : LaurentInt(1);
  auto sgn_of = [](bool odd) { return odd ? LaurentInt(-1) : LaurentInt(1); };
  using Out = std::vector<std::pair<LaurentInt, std::vector<int>>>;
  if (a == c) {
    // E_{a,b} E_{a,d} with d < b
    return Out{{sgn_of(X.odd) * qpow_i(a, -1), {x, y}}};
  }
  if (b == d) {
    if (a > c) return Out{{sgn_of(Y.odd) * qpow_i(b, -1), {x, y}}};
    return Out{{sgn_of(X.odd) * qpow_i(b, 1), {x, y}}};
  }
  if (b == c) {
    // E_ab E_bd = E_ad + q_b^{-1} E_bd E_ab
    return Out{{LaurentInt(1), {rd_.rank_of(a, d)}}, {qpow_i(b, -1), {x, y}}};
  }
  if (d == a) {
    // E_ab E_ca = q_a E_ca E_ab - q_a E_cb
    return Out{{qpow_i(a, 1), {x, y}}, {-qpow_i(a, 1), {rd_.rank_of(c, b)}}};
  }
  if (a < c && c < b && b < d) {
    LaurentInt k = qpow_i(b, 1) - qpow_i(b, -1);
    return Out{{sigma, {x, y}}, {k, {rd_.rank_of(a, d), rd_.rank_of(c, b)}}};
  }
  if (c < a && a < d && d < b) {
    LaurentInt k = qpow_i(d, 1) - qpow_i(d, -1);
    return Out{{sigma, {x, y}}, {-(sigma * k), {rd_.rank_of(c, b), rd_.rank_of(a, d)}}};
  }
  // nested or disjoint
  return Out{{sigma, {x, y}}};
}

const Algebra::ETerms& Algebra::e_insert(const EVec& m, int x) {
  EVec key = m;
  key.push_back(x);
  auto it = e_insert_memo_.find(key);
  if (it != e_insert_memo_.end()) return it->second;
  ++steps_;
  ETerms out;
  int y = -1;
  for (int r = R() - 1; r >= 0; --r)
    if (m[r] > 0) {
      y = r;
      break;
    }
  if (y < x || (y == x && !rd_.root(x).odd)) {
    EVec r = m;
    r[x]++;
    out.emplace_back(std::move(r), LaurentInt(1));
  } else if (y > x) {
    EVec mp = m;
    mp[y]--;
    std::map<EVec, LaurentInt> acc;
    for (const auto& [c, word] : swap_e(y, x)) {
      std::map<EVec, LaurentInt> cur{{mp, c}};
      for (int letter : word) {
        std::map<EVec, LaurentInt> next;
        for (const auto& [v, cv] : cur)
          for (const auto& [w, cw] : e_insert(v, letter)) next[w] += cv * cw;
        cur.clear();
        for (auto& [w, cw] : next)
          if (!cw.is_zero()) cur.emplace(w, cw);
      }
      for (const auto& [w, cw] : cur) acc[w] += cw;
    }
    for (auto& [w, cw] : acc)
      if (!cw.is_zero()) out.emplace_back(w, cw);
  }
  return e_insert_memo_.emplace(std::move(key), std::move(out)).first->second;
}

Algebra::ETerms Algebra::e_mul(const EVec& a, const EVec& b) {
  std::map<EVec, LaurentInt> cur{{a, LaurentInt(1)}};
  for (int r = 0; r < R(); ++r) {
    for (int t = 0; t < b[r]; ++t) {
      std::map<EVec, LaurentInt> next;
      for (const auto& [v, cv] : cur)
        for (const auto& [w, cw] : e_insert(v, r)) next[w] += cv * cw;
      cur.clear();
      for (auto& [w, cw] : next)
        if (!cw.is_zero()) cur.emplace(w, cw);
    }
  }
  return ETerms(cur.begin(), cur.end());
}

Algebra::ETerms Algebra::f_mul(const EVec& a, const EVec& b) {
  ETerms t = e_mul(b, a);
  for (auto& [v, c] : t) c = c.bar();
  return t;
}

// ---------------------------------------------------------------- full multiplication

void Algebra::accumulate(std::unordered_map<Monomial, FracCoef, MonomialHash>& acc, const Monomial& m,
                         const FracCoef& c) {
  if (c.is_zero()) return;
  auto it = acc.find(m);
  if (it == acc.end()) acc.emplace(m, c);
  else it->second += c;
}

Algebra::CTerms Algebra::to_terms(std::unordered_map<Monomial, FracCoef, MonomialHash>& acc) {
  CTerms out;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.emplace_back(m, std::move(c));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

const Algebra::CTerms& Algebra::mono_mul(const Monomial& A, const Monomial& B) {
  auto key = std::make_pair(A, B);
  auto it = mono_memo_.find(key);
  if (it != mono_memo_.end()) return it->second;
  ++steps_;
  std::unordered_map<Monomial, FracCoef, MonomialHash> acc;
  IntVec kA = A.kvec(), kB = B.kvec();
  IntVec ksum(N());
  for (int j = 0; j < N(); ++j) ksum[j] = kA[j] + kB[j];
  if (!A.has_e()) {
    EVec af(R()), bf(R());
    for (int r = 0; r < R(); ++r) {
      af[r] = A.f(r);
      bf[r] = B.f(r);
    }
    long p = -pair_mu(kA, evec_weight(bf));
    for (const auto& [fv, c] : f_mul(af, bf)) {
      Monomial m = identity_monomial();
      for (int r = 0; r < R(); ++r) {
        m.f(r) = fv[r];
        m.e(r) = B.e(r);
      }
      m.set_k(ksum);
      accumulate(acc, m, FracCoef(c.shifted(static_cast<int>(p))));
    }
  } else if (!B.has_f()) {
    EVec ae(R()), be(R());
    for (int r = 0; r < R(); ++r) {
      ae[r] = A.e(r);
      be[r] = B.e(r);
    }
    long p = -pair_mu(kB, evec_weight(ae));
    for (const auto& [ev, c] : e_mul(ae, be)) {
      Monomial m = identity_monomial();
      for (int r = 0; r < R(); ++r) {
        m.f(r) = A.f(r);
        m.e(r) = ev[r];
      }
      m.set_k(ksum);
      accumulate(acc, m, FracCoef(c.shifted(static_cast<int>(p))));
    }
  } else {
    int y = -1;
    for (int r = R() - 1; r >= 0; --r)
      if (A.e(r) > 0) {
        y = r;
        break;
      }
    Monomial Ap = A;
    Ap.e(y)--;
    const CTerms& X = e_atom_mul(y, B);
    for (const auto& [m, c] : X)
      for (const auto& [m2, c2] : mono_mul(Ap, m)) accumulate(acc, m2, c * c2);
  }
  return mono_memo_.emplace(std::move(key), to_terms(acc)).first->second;
}

const Algebra::CTerms& Algebra::e_atom_mul(int y, const Monomial& B) {
  if (!B.has_f()) return mono_mul(e_atom(y), B);
  auto key = std::make_pair(y, B);
  auto it = eatom_memo_.find(key);
  if (it != eatom_memo_.end()) return it->second;
  ++steps_;
  std::unordered_map<Monomial, FracCoef, MonomialHash> acc;
  const Root& rt = rd_.root(y);
  if (rd_.is_simple(y)) {
    int x = -1;
    for (int r = R() - 1; r >= 0; --r)
      if (B.f(r) > 0) {
        x = r;
        break;
      }
    Monomial Bp = B;
    Bp.f(x)--;
    const CTerms& C = cross(y, x);
    for (const auto& [m, c] : C)
      for (const auto& [m2, c2] : mono_mul(m, Bp)) accumulate(acc, m2, c * c2);
  } else {
    int c = rt.i + 1;
    int ic = rd_.rank_of(rt.i, c), cj = rd_.rank_of(c, rt.j);
    for (const auto& [m, c1] : e_atom_mul(cj, B))
      for (const auto& [m2, c2] : e_atom_mul(ic, m)) accumulate(acc, m2, c1 * c2);
    FracCoef k(-qpow_i(c, -1));
    for (const auto& [m, c1] : e_atom_mul(ic, B))
      for (const auto& [m2, c2] : e_atom_mul(cj, m)) accumulate(acc, m2, k * c1 * c2);
  }
  return eatom_memo_.emplace(std::move(key), to_terms(acc)).first->second;
}

const Algebra::CTerms& Algebra::cross(int y, int x) {
  auto key = std::make_pair(y, x);
  auto it = cross_memo_.find(key);
  if (it != cross_memo_.end()) return it->second;
  ++steps_;
  std::unordered_map<Monomial, FracCoef, MonomialHash> acc;
  const Root& Y = rd_.root(y);
  const Root& X = rd_.root(x);
  if (rd_.is_simple(x)) {
    Monomial m = identity_monomial();
    m.f(x) = 1;
    m.e(y) = 1;
    accumulate(acc, m, FracCoef(LaurentInt((Y.odd && X.odd) ? -1 : 1)));
    if (Y.i == X.i) {
      int a = Y.i;
      FracCoef inv = FracCoef::inv_q_minus_qinv() * FracCoef(LaurentInt(rd_.qsign(a)));
      IntVec mu = k_alpha_vec(a);
      Monomial kp = identity_monomial(), km = identity_monomial();
      kp.set_k(mu);
      km.set_k(scaled_vec(mu, -1));
      accumulate(acc, kp, inv);
      accumulate(acc, km, -inv);
    }
  } else {
    int c = X.i + 1;
    int sc = rd_.rank_of(X.i, c), ct = rd_.rank_of(c, X.j);
    FracCoef k(-qpow_i(c, 1));
    for (const auto& [m, c1] : cross(y, sc))
      for (const auto& [m2, c2] : mono_mul(m, f_atom(ct))) accumulate(acc, m2, k * c1 * c2);
    for (const auto& [m, c1] : cross(y, ct))
      for (const auto& [m2, c2] : mono_mul(m, f_atom(sc))) accumulate(acc, m2, c1 * c2);
  }
  return cross_memo_.emplace(key, to_terms(acc)).first->second;
}

Element Algebra::multiply(const Element& a, const Element& b) {
  if (a.shape() != shape() || b.shape() != shape()) throw DomainError("shape mismatch in multiply");
  Element out(shape());
  if (a.is_zero() || b.is_zero()) return out;
  // Fast path: all coefficients in the engine's coefficient ring.
  std::vector<std::pair<const Monomial*, FracCoef>> fa, fb;
  bool fast = true;
  for (const auto& [m, c] : a.terms()) {
    auto fc = FracCoef::from_rat(c);
    if (!fc) {
      fast = false;
      break;
    }
    fa.emplace_back(&m, *fc);
  }
  if (fast)
    for (const auto& [m, c] : b.terms()) {
      auto fc = FracCoef::from_rat(c);
      if (!fc) {
        fast = false;
        break;
      }
      fb.emplace_back(&m, *fc);
    }
  if (fast) {
    std::unordered_map<Monomial, FracCoef, MonomialHash> acc;
    for (const auto& [ma, ca] : fa)
      for (const auto& [mb, cb] : fb) {
        FracCoef w = ca * cb;
        for (const auto& [m, c] : mono_mul(*ma, *mb)) accumulate(acc, m, w * c);
      }
    for (auto& [m, c] : acc)
      if (!c.is_zero()) out.add_term(m, c.to_rat());
    return out;
  }
  std::unordered_map<Monomial, RatFunc, MonomialHash> acc;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      RatFunc w = ca * cb;
      for (const auto& [m, c] : mono_mul(ma, mb)) acc[m] += w * c.to_rat();
    }
  for (auto& [m, c] : acc) out.add_term(m, c);
  return out;
}

Element Algebra::product(const std::vector<Element>& factors) {
  Element r = one();
  for (const auto& f : factors) r = multiply(r, f);
  return r;
}

Element Algebra::power(const Element& a, int n) {
  if (n < 0) throw DomainError("negative power of a non-scalar element");
  Element r = one();
  for (int k = 0; k < n; ++k) r = multiply(r, a);
  return r;
}

Element Algebra::commutator(const Element& a, const Element& b, bool super) {
  int s = 1;
  if (super) {
    int pa = parity(a), pb = parity(b);
    if (pa < 0 || pb < 0) throw DomainError("super commutator of inhomogeneous elements");
    if (pa == 1 && pb == 1) s = -1;
  }
  return multiply(a, b) - multiply(b, a).scaled(RatFunc(s));
}

// ---------------------------------------------------------------- maps

Element Algebra::omega(const Element& a) const {
  Element r(shape());
  for (const auto& [m, c] : a.terms()) {
    Monomial o = identity_monomial();
    for (int rr = 0; rr < R(); ++rr) {
      o.f(rr) = m.e(rr);
      o.e(rr) = m.f(rr);
    }
    for (int j = 0; j < N(); ++j) o.k(j) = -m.k(j);
    r.add_term(o, c.bar());
  }
  return r;
}

Element Algebra::simple_image(GenKind kind, int r, const MapSpec& ms,
                              std::map<std::pair<int, int>, Element>& memo) {
  auto key = std::make_pair(kind == GenKind::E ? 0 : 1, r);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const Root& rt = rd_.root(r);
  Element img(shape());
  if (rd_.is_simple(r)) {
    img = ms.simple(kind, rt.i);
  } else {
    int c = rt.i + 1;
    int ic = rd_.rank_of(rt.i, c), cj = rd_.rank_of(c, rt.j);
    Element X = simple_image(kind, ic, ms, memo);
    Element Y = simple_image(kind, cj, ms, memo);
    RatFunc sigma(1);
    if (ms.anti && ms.graded && rd_.root(ic).odd && rd_.root(cj).odd) sigma = RatFunc(-1);
    auto qc = [&](int e) {
      RatFunc v = RatFunc::q_pow(rd_.qsign(c) * e);
      return ms.conj ? v.bar() : v;
    };
    if (kind == GenKind::E) {
      // E_ij = E_ic E_cj - q_c^{-1} E_cj E_ic
      if (!ms.anti) img = multiply(X, Y) - multiply(Y, X).scaled(qc(-1));
      else img = (multiply(Y, X) - multiply(X, Y).scaled(qc(-1))).scaled(sigma);
    } else {
      // F_ij = -q_c F_ic F_cj + F_cj F_ic
      if (!ms.anti) img = multiply(Y, X) - multiply(X, Y).scaled(qc(1));
      else img = (multiply(X, Y) - multiply(Y, X).scaled(qc(1))).scaled(sigma);
    }
  }
  memo.emplace(key, img);
  return img;
}

Element Algebra::apply_map(const Element& a, const MapSpec& ms) {
  std::map<std::pair<int, int>, Element> memo;
  Element out(shape());
  for (const auto& [m, c] : a.terms()) {
    std::vector<Element> factors;
    int odd_count = 0;
    for (int r = R() - 1; r >= 0; --r)
      for (int t = 0; t < m.f(r); ++t) {
        factors.push_back(simple_image(GenKind::F, r, ms, memo));
        if (rd_.root(r).odd) ++odd_count;
      }
    factors.push_back(ms.kimage(m.kvec()));
    for (int r = 0; r < R(); ++r)
      for (int t = 0; t < m.e(r); ++t) {
        factors.push_back(simple_image(GenKind::E, r, ms, memo));
        if (rd_.root(r).odd) ++odd_count;
      }
    if (ms.anti) std::reverse(factors.begin(), factors.end());
    RatFunc coef = ms.conj ? c.bar() : c;
    if (ms.anti && ms.graded && (odd_count * (odd_count - 1) / 2) % 2 == 1) coef = -coef;
    out += product(factors).scaled(coef);
  }
  return out;
}

Element Algebra::psi(const Element& a) {
  MapSpec ms;
  ms.simple = [this](GenKind k, int i) { return generator(k, i, i + 1); };
  ms.kimage = [this](const IntVec& mu) { return k_monomial(mu); };
  ms.anti = true;
  ms.graded = true;
  ms.conj = true;
  return apply_map(a, ms);
}

Element Algebra::ef_closed_bracket(int i, int j, int c) const {
  // [E_ij, F_{c,c+1}] = d_{c+1,j} E_ic K_c K_{c+1}^{-1} q_c^{-1} - d_ic (-1)^{d_cm} E_{c+1,j} K_c^{-1} K_{c+1}
  Element r(shape());
  IntVec mu(N(), 0);
  mu[c - 1] = 1;
  mu[c] = -1;
  auto e_then_k = [&](int a, int b, const IntVec& k, const RatFunc& coef) {
    // E_ab K_k = q^{-(k, beta)} K_k E_ab
    Monomial m = identity_monomial();
    m.e(rd_.rank_of(a, b)) = 1;
    m.set_k(k);
    long p = -rd_.pair_root(k, a, b);
    r.add_term(m, coef * RatFunc::q_pow(static_cast<int>(p)));
  };
  if (c + 1 == j && i < c) e_then_k(i, c, mu, RatFunc::q_pow(-rd_.qsign(c)));
  if (i == c && c + 1 < j) e_then_k(c + 1, j, scaled_vec(mu, -1), RatFunc(c == rd_.m() ? 1 : -1));
  return r;
}

// ---------------------------------------------------------------- A-form

std::map<AFormKey, LaurentInt> Algebra::a_form_coords(const Element& a) const {
  std::map<AFormKey, RatFunc> acc;
  for (const auto& [m, c] : a.terms()) {
    LaurentInt fac(1);
    AFormKey base;
    base.f.resize(R());
    base.e.resize(R());
    for (int r = 0; r < R(); ++r) {
      base.f[r] = m.f(r);
      base.e[r] = m.e(r);
      fac *= gauss_factorial(m.f(r)) * gauss_factorial(m.e(r));
    }
    // K_j = prod_{i >= j} K_{alpha_i}
    std::vector<std::vector<std::tuple<int, int, RatFunc>>> per(N());
    long prefix = 0;
    for (int i = 1; i <= N(); ++i) {
      prefix += m.k(i - 1);
      per[i - 1] = k_power_coords(static_cast<int>(prefix), rd_.qsign(i));
    }
    std::vector<std::pair<std::vector<std::pair<int, int>>, RatFunc>> combos{{{}, c * RatFunc(fac)}};
    for (int i = 0; i < N(); ++i) {
      std::vector<std::pair<std::vector<std::pair<int, int>>, RatFunc>> next;
      for (const auto& [dt, v] : combos)
        for (const auto& [d, t, w] : per[i]) {
          auto ndt = dt;
          ndt.emplace_back(d, t);
          next.emplace_back(std::move(ndt), v * w);
        }
      combos = std::move(next);
    }
    for (const auto& [dt, v] : combos) {
      AFormKey key = base;
      for (const auto& [d, t] : dt) {
        key.delta.push_back(d);
        key.t.push_back(t);
      }
      auto it = acc.find(key);
      if (it == acc.end()) acc.emplace(key, v);
      else it->second += v;
    }
  }
  std::map<AFormKey, LaurentInt> out;
  for (const auto& [k, v] : acc) {
    if (v.is_zero()) continue;
    auto l = v.to_laurent();
    if (!l) throw NotIntegral("coefficient " + v.to_string() + " is not in Z[q,q^-1]");
    out.emplace(k, *l);
  }
  return out;
}

}  // namespace qsuper
