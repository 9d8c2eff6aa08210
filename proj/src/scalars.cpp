#include "qsuper/scalars.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace qsuper {

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

QPoly QPoly::constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }

QPoly QPoly::monomial(const Rational& c, int deg) {
  std::vector<Rational> v(deg + 1);
  v[deg] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational QPoly::coeff(int d) const {
  if (d < 0 || d > degree()) return 0;
  return c_[d];
}

int QPoly::low_degree() const {
  for (size_t k = 0; k < c_.size(); ++k)
    if (sgn(c_[k]) != 0) return static_cast<int>(k);
  return 0;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()));
  for (size_t k = 0; k < c_.size(); ++k) v[k] = c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) v[k] += o.c_[k];
  return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> v(c_.size() + o.c_.size() - 1);
  for (size_t a = 0; a < c_.size(); ++a) {
    if (sgn(c_[a]) == 0) continue;
    for (size_t b = 0; b < o.c_.size(); ++b) v[a + b] += c_[a] * o.c_[b];
  }
  return QPoly(std::move(v));
}

QPoly QPoly::scaled(const Rational& s) const {
  if (sgn(s) == 0) return {};
  QPoly r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

QPoly QPoly::shifted_down(int k) const {
  if (k == 0) return *this;
  if (k < 0) return shifted_up(-k);
  if (static_cast<int>(c_.size()) <= k) return {};
  return QPoly(std::vector<Rational>(c_.begin() + k, c_.end()));
}

QPoly QPoly::shifted_up(int k) const {
  if (k == 0) return *this;
  if (k < 0) return shifted_down(-k);
  if (is_zero()) return {};
  std::vector<Rational> v(k);
  v.insert(v.end(), c_.begin(), c_.end());
  return QPoly(std::move(v));
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / lead();
  return scaled(inv);
}

Rational QPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.c_;
  int db = b.degree();
  int da = a.degree();
  if (da < db) {
    quo = {};
    rem = a;
    return;
  }
  std::vector<Rational> q(da - db + 1);
  Rational inv = 1 / b.lead();
  for (int k = da; k >= db; --k) {
    if (sgn(r[k]) == 0) continue;
    Rational f = r[k] * inv;
    q[k - db] = f;
    for (int t = 0; t <= db; ++t) r[k - db + t] -= f * b.c_[t];
  }
  quo = QPoly(std::move(q));
  r.resize(db);
  rem = QPoly(std::move(r));
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

QPoly QPoly::xgcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t) {
  QPoly r0 = a, r1 = b, s0 = constant(1), s1, t0, t1 = constant(1);
  while (!r1.is_zero()) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = {};
    t = {};
    return {};
  }
  Rational inv = 1 / r0.lead();
  s = s0.scaled(inv);
  t = t0.scaled(inv);
  return r0.scaled(inv);
}

// ---------------------------------------------------------------- LaurentInt

LaurentInt::LaurentInt(long v) {
  if (v != 0) c_.emplace_back(v);
}

LaurentInt::LaurentInt(const BigInt& v) {
  if (sgn(v) != 0) c_.push_back(v);
}

LaurentInt LaurentInt::q_pow(int e, const BigInt& c) {
  LaurentInt r(c);
  if (!r.is_zero()) r.low_ = e;
  return r;
}

LaurentInt LaurentInt::from_terms(const std::map<int, BigInt>& t) {
  LaurentInt r;
  for (const auto& [e, c] : t) r += q_pow(e, c);
  return r;
}

void LaurentInt::trim() {
  size_t lo = 0;
  while (lo < c_.size() && sgn(c_[lo]) == 0) ++lo;
  if (lo == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  size_t hi = c_.size();
  while (sgn(c_[hi - 1]) == 0) --hi;
  if (lo > 0 || hi < c_.size()) c_ = std::vector<BigInt>(c_.begin() + lo, c_.begin() + hi);
  low_ += static_cast<int>(lo);
}

BigInt LaurentInt::coeff(int e) const {
  if (is_zero() || e < low_ || e > max_exp()) return 0;
  return c_[e - low_];
}

std::map<int, BigInt> LaurentInt::terms() const {
  std::map<int, BigInt> t;
  for (size_t k = 0; k < c_.size(); ++k)
    if (sgn(c_[k]) != 0) t[low_ + static_cast<int>(k)] = c_[k];
  return t;
}

bool LaurentInt::is_monomial() const { return c_.size() == 1; }

LaurentInt LaurentInt::operator-() const {
  LaurentInt r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LaurentInt& LaurentInt::operator+=(const LaurentInt& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(max_exp(), o.max_exp());
  if (lo < low_ || hi > max_exp()) {
    std::vector<BigInt> v(hi - lo + 1);
    for (size_t k = 0; k < c_.size(); ++k) v[low_ - lo + k] = std::move(c_[k]);
    c_ = std::move(v);
    low_ = lo;
  }
  for (size_t k = 0; k < o.c_.size(); ++k) c_[o.low_ - low_ + k] += o.c_[k];
  trim();
  return *this;
}

LaurentInt LaurentInt::operator+(const LaurentInt& o) const {
  LaurentInt r = *this;
  r += o;
  return r;
}

LaurentInt LaurentInt::operator-(const LaurentInt& o) const { return *this + (-o); }

LaurentInt LaurentInt::operator*(const LaurentInt& o) const {
  if (is_zero() || o.is_zero()) return {};
  LaurentInt r;
  r.low_ = low_ + o.low_;
  r.c_.assign(c_.size() + o.c_.size() - 1, BigInt(0));
  for (size_t a = 0; a < c_.size(); ++a) {
    if (sgn(c_[a]) == 0) continue;
    for (size_t b = 0; b < o.c_.size(); ++b) r.c_[a + b] += c_[a] * o.c_[b];
  }
  r.trim();
  return r;
}

LaurentInt LaurentInt::shifted(int k) const {
  LaurentInt r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentInt LaurentInt::bar() const {
  if (is_zero()) return {};
  LaurentInt r;
  r.c_.assign(c_.rbegin(), c_.rend());
  r.low_ = -max_exp();
  return r;
}

bool LaurentInt::operator<(const LaurentInt& o) const {
  if (low_ != o.low_) return low_ < o.low_;
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != o.c_[k]) return c_[k] < o.c_[k];
  return false;
}

BigInt LaurentInt::eval_at_one() const {
  BigInt s = 0;
  for (const auto& x : c_) s += x;
  return s;
}

BigInt LaurentInt::eval_at_minus_one() const {
  BigInt s = 0;
  for (size_t k = 0; k < c_.size(); ++k) {
    bool odd = ((low_ + static_cast<int>(k)) % 2) != 0;
    if (odd) s -= c_[k];
    else s += c_[k];
  }
  return s;
}

std::optional<LaurentInt> LaurentInt::divexact(const LaurentInt& d) const {
  if (d.is_zero()) throw std::domain_error("Laurent division by zero");
  if (is_zero()) return LaurentInt();
  // Long division from the top on the dense coefficient windows.
  std::vector<BigInt> r = c_;
  int dn = static_cast<int>(d.c_.size()) - 1;
  int rn = static_cast<int>(r.size()) - 1;
  if (rn < dn) return std::nullopt;
  std::vector<BigInt> q(rn - dn + 1);
  const BigInt& lead = d.c_.back();
  for (int k = rn; k >= dn; --k) {
    if (sgn(r[k]) == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    BigInt f = r[k] / lead;
    q[k - dn] = f;
    for (int t = 0; t <= dn; ++t) r[k - dn + t] -= f * d.c_[t];
  }
  for (int k = 0; k < dn; ++k)
    if (sgn(r[k]) != 0) return std::nullopt;
  LaurentInt out;
  out.c_ = std::move(q);
  out.low_ = low_ - d.low_;
  out.trim();
  return out;
}

namespace {

std::string rational_text(const Rational& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Renders sum of c*q^e in descending exponent order.
std::string render_terms(const std::vector<std::pair<int, Rational>>& desc) {
  if (desc.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : desc) {
    Rational a = abs(c);
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string var;
    if (e == 1) var = "q";
    else if (e != 0) var = "q^" + std::to_string(e);
    if (var.empty()) out += rational_text(a);
    else if (a == 1) out += var;
    else out += rational_text(a) + "*" + var;
  }
  return out;
}

}  // namespace

std::string LaurentInt::to_string() const {
  std::vector<std::pair<int, Rational>> desc;
  for (size_t k = c_.size(); k-- > 0;)
    if (sgn(c_[k]) != 0) desc.emplace_back(low_ + static_cast<int>(k), Rational(c_[k]));
  return render_terms(desc);
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(long v) : num_(QPoly::constant(v)) {}
RatFunc::RatFunc(const Rational& v) : num_(QPoly::constant(v)) {}

RatFunc::RatFunc(const LaurentInt& l) {
  if (l.is_zero()) return;
  std::vector<Rational> v(l.c_.begin(), l.c_.end());
  if (l.low_ >= 0) {
    num_ = QPoly(std::move(v)).shifted_up(l.low_);
  } else {
    num_ = QPoly(std::move(v));
    den_ = QPoly::monomial(1, -l.low_);
  }
}

RatFunc::RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

RatFunc RatFunc::q_pow(int e) { return RatFunc(LaurentInt::q_pow(e)); }

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      QPoly r;
      QPoly::divmod(num_, g, num_, r);
      QPoly::divmod(den_, g, den_, r);
    }
  }
  if (den_.lead() != 1) {
    Rational inv = 1 / den_.lead();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

bool RatFunc::is_one() const { return den_.degree() == 0 && num_.degree() == 0 && num_.lead() == 1; }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  RatFunc r;
  if (den_ == o.den_) {
    r.num_ = num_ + o.num_;
    r.den_ = den_;
    r.normalize();
    return r;
  }
  if (den_.degree() == 0 && o.den_.degree() == 0) {
    r.num_ = num_ + o.num_;
    return r;
  }
  QPoly g = QPoly::gcd(den_, o.den_);
  QPoly a, b, rem;
  QPoly::divmod(den_, g, a, rem);
  QPoly::divmod(o.den_, g, b, rem);
  r.num_ = num_ * b + o.num_ * a;
  r.den_ = den_ * b;
  r.normalize();
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return {};
  RatFunc r;
  if (den_.degree() == 0 && o.den_.degree() == 0) {
    r.num_ = num_ * o.num_;
    return r;
  }
  // Cross-cancel before multiplying to keep degrees small.
  QPoly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_, rem;
  if (d2.degree() > 0) {
    QPoly g = QPoly::gcd(n1, d2);
    if (g.degree() > 0) {
      QPoly::divmod(n1, g, n1, rem);
      QPoly::divmod(d2, g, d2, rem);
    }
  }
  if (d1.degree() > 0) {
    QPoly g = QPoly::gcd(n2, d1);
    if (g.degree() > 0) {
      QPoly::divmod(n2, g, n2, rem);
      QPoly::divmod(d1, g, d1, rem);
    }
  }
  r.num_ = n1 * n2;
  r.den_ = d1 * d2;
  Rational inv = 1 / r.den_.lead();
  if (inv != 1) {
    r.num_ = r.num_.scaled(inv);
    r.den_ = r.den_.scaled(inv);
  }
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

RatFunc RatFunc::bar() const {
  if (is_zero()) return {};
  // p(q^-1) = q^-deg * reverse(p)
  auto rev = [](const QPoly& p) {
    std::vector<Rational> v(p.coeffs().rbegin(), p.coeffs().rend());
    return QPoly(std::move(v));
  };
  int shift = den_.degree() - num_.degree();
  QPoly n = rev(num_), d = rev(den_);
  if (shift >= 0) n = n.shifted_up(shift);
  else d = d.shifted_up(-shift);
  return RatFunc(n, d);
}

std::optional<LaurentInt> RatFunc::to_laurent() const {
  if (den_.degree() < 0) return std::nullopt;
  // den must be q^k
  for (int k = 0; k < den_.degree(); ++k)
    if (sgn(den_.coeffs()[k]) != 0) return std::nullopt;
  std::map<int, BigInt> t;
  for (int k = 0; k <= num_.degree(); ++k) {
    const Rational& c = num_.coeffs()[k];
    if (sgn(c) == 0) continue;
    if (c.get_den() != 1) return std::nullopt;
    t[k - den_.degree()] = c.get_num();
  }
  return LaurentInt::from_terms(t);
}

Rational RatFunc::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (sgn(d) == 0) throw DenominatorVanishes("denominator vanishes at " + x.get_str());
  return num_.eval(x) / d;
}

std::string RatFunc::to_string() const {
  int a = den_.low_degree();
  QPoly d = den_.shifted_down(a);
  std::vector<std::pair<int, Rational>> desc;
  for (int k = num_.degree(); k >= 0; --k)
    if (sgn(num_.coeffs()[k]) != 0) desc.emplace_back(k - a, num_.coeffs()[k]);
  std::string n = render_terms(desc);
  if (d.degree() == 0) return n;
  std::vector<std::pair<int, Rational>> dd;
  for (int k = d.degree(); k >= 0; --k)
    if (sgn(d.coeffs()[k]) != 0) dd.emplace_back(k, d.coeffs()[k]);
  return "(" + n + ")/(" + render_terms(dd) + ")";
}

// ---------------------------------------------------------------- CycloNum

void require_odd_order(int l) {
  if (l < 3 || l % 2 == 0)
    throw std::domain_error("root of unity order must be odd and at least 3, got " + std::to_string(l));
}

namespace {

QPoly compute_cyclotomic(int l) {
  QPoly p = QPoly::monomial(1, l) - QPoly::constant(1);
  for (int d = 1; d < l; ++d) {
    if (l % d != 0) continue;
    QPoly q, r;
    QPoly::divmod(p, compute_cyclotomic(d), q, r);
    p = q;
  }
  return p;
}

}  // namespace

const QPoly& cyclotomic_polynomial(int l) {
  static std::mutex mu;
  static std::unordered_map<int, QPoly> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(l);
    if (it != memo.end()) return it->second;
  }
  QPoly p = compute_cyclotomic(l);
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(l, std::move(p)).first->second;
}

int CycloNum::join(int a, int b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw std::domain_error("mixing roots of unity of different orders");
}

CycloNum::CycloNum(long v) : r_(QPoly::constant(v)) {}
CycloNum::CycloNum(const Rational& v) : r_(QPoly::constant(v)) {}

CycloNum::CycloNum(int l, QPoly residue) : l_(l) {
  require_odd_order(l);
  QPoly q;
  QPoly::divmod(residue, cyclotomic_polynomial(l), q, r_);
}

CycloNum CycloNum::eta(int l) { return CycloNum(l, QPoly::monomial(1, 1)); }

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  r.r_ = -r.r_;
  return r;
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
  CycloNum r;
  r.l_ = join(l_, o.l_);
  r.r_ = r_ + o.r_;
  return r;
}

CycloNum CycloNum::operator-(const CycloNum& o) const { return *this + (-o); }

CycloNum CycloNum::operator*(const CycloNum& o) const {
  int l = join(l_, o.l_);
  if (l == 0) {
    CycloNum r;
    r.r_ = r_ * o.r_;
    return r;
  }
  return CycloNum(l, r_ * o.r_);
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in cyclotomic field");
  if (l_ == 0) {
    CycloNum r;
    r.r_ = QPoly::constant(1 / r_.lead());
    return r;
  }
  QPoly s, t;
  QPoly g = QPoly::xgcd(r_, cyclotomic_polynomial(l_), s, t);
  if (g.degree() != 0) throw std::logic_error("cyclotomic polynomial not coprime to residue");
  return CycloNum(l_, s);
}

CycloNum CycloNum::operator/(const CycloNum& o) const { return *this * o.inverse(); }

CycloNum CycloNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNum r(1), b = *this;
  r.l_ = l_;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool CycloNum::operator==(const CycloNum& o) const {
  join(l_, o.l_);
  return r_ == o.r_;
}

std::string CycloNum::to_string() const {
  std::string s = RatFunc(r_, QPoly::constant(1)).to_string();
  std::string out;
  for (char ch : s) {
    if (ch == 'q') out += "eta";
    else out += ch;
  }
  return out;
}

// ---------------------------------------------------------------- q-combinatorics

LaurentInt gauss_int(long n, int sign) {
  if (n < 0) return -gauss_int(-n, sign);
  LaurentInt r;
  for (long k = 0; k < n; ++k) r += LaurentInt::q_pow(static_cast<int>(sign * (n - 1 - 2 * k)));
  return r;
}

LaurentInt gauss_factorial(long n, int sign) {
  LaurentInt r(1);
  for (long k = 2; k <= n; ++k) r *= gauss_int(k, sign);
  return r;
}

LaurentInt gauss_binomial(long m, long n, int sign) {
  if (n < 0) return {};
  if (m >= 0 && n > m) return {};
  LaurentInt num(1), den(1);
  for (long s = 1; s <= n; ++s) {
    num *= gauss_int(m - s + 1, sign);
    den *= gauss_int(s, sign);
  }
  auto q = num.divexact(den);
  if (!q) throw std::logic_error("Gaussian binomial not integral");
  return *q;
}

RatFunc kbracket_scalar(long zval, long c, long t, int sign) {
  RatFunc r(1);
  for (long s = 1; s <= t; ++s) {
    long e = zval + c - s + 1;
    RatFunc num = RatFunc(LaurentInt::q_pow(static_cast<int>(sign * e)) -
                          LaurentInt::q_pow(static_cast<int>(-sign * e)));
    RatFunc den = RatFunc(LaurentInt::q_pow(static_cast<int>(sign * s)) -
                          LaurentInt::q_pow(static_cast<int>(-sign * s)));
    r = r * num / den;
  }
  return r;
}

CycloNum evaluate_at_root(const RatFunc& x, int l) {
  require_odd_order(l);
  CycloNum d(l, x.den());
  if (d.is_zero()) throw DenominatorVanishes("denominator vanishes at a primitive " + std::to_string(l) + "-th root of unity");
  return CycloNum(l, x.num()) / d;
}

CycloNum evaluate_at_root(const LaurentInt& x, int l) { return evaluate_at_root(RatFunc(x), l); }

}  // namespace qsuper
