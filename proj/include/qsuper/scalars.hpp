#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsuper {

using BigInt = mpz_class;
using Rational = mpq_class;

struct DenominatorVanishes : std::domain_error {
  using std::domain_error::domain_error;
};

// Dense polynomial over Q in the variable q. Zero is the empty vector.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> c);
  static QPoly constant(const Rational& c);
  static QPoly monomial(const Rational& c, int deg);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int d) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& lead() const { return c_.back(); }
  int low_degree() const;  // smallest exponent with nonzero coefficient

  QPoly operator-() const;
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly scaled(const Rational& s) const;
  QPoly shifted_down(int k) const;  // divide by q^k, assumes divisibility
  QPoly shifted_up(int k) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  QPoly monic() const;
  Rational eval(const Rational& x) const;

  static void divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem);
  static QPoly gcd(QPoly a, QPoly b);  // monic, gcd(0,0)=0
  // Extended Euclid: returns g monic with s*a + t*b = g.
  static QPoly xgcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t);

 private:
  std::vector<Rational> c_;
  void trim();
};

// Laurent polynomial in q with integer coefficients, stored densely from
// exponent low_ upward. Zero has no coefficients.
class LaurentInt {
 public:
  LaurentInt() = default;
  LaurentInt(long v);  // NOLINT(google-explicit-constructor)
  explicit LaurentInt(const BigInt& v);
  static LaurentInt q_pow(int e, const BigInt& c = 1);
  static LaurentInt from_terms(const std::map<int, BigInt>& t);

  bool is_zero() const { return c_.empty(); }
  int min_exp() const { return low_; }
  int max_exp() const { return low_ + static_cast<int>(c_.size()) - 1; }
  BigInt coeff(int e) const;
  std::map<int, BigInt> terms() const;
  bool is_monomial() const;

  LaurentInt operator-() const;
  LaurentInt operator+(const LaurentInt& o) const;
  LaurentInt operator-(const LaurentInt& o) const;
  LaurentInt operator*(const LaurentInt& o) const;
  LaurentInt& operator+=(const LaurentInt& o);
  LaurentInt& operator-=(const LaurentInt& o) { return *this += -o; }
  LaurentInt& operator*=(const LaurentInt& o) { return *this = *this * o; }
  LaurentInt shifted(int k) const;  // multiply by q^k
  LaurentInt bar() const;           // q -> q^-1
  bool operator==(const LaurentInt& o) const { return low_ == o.low_ && c_ == o.c_; }
  bool operator!=(const LaurentInt& o) const { return !(*this == o); }
  bool operator<(const LaurentInt& o) const;

  BigInt eval_at_one() const;
  BigInt eval_at_minus_one() const;
  // Exact quotient by d; nullopt if d does not divide *this in Z[q,q^-1].
  std::optional<LaurentInt> divexact(const LaurentInt& d) const;

  std::string to_string() const;

 private:
  int low_ = 0;
  std::vector<BigInt> c_;
  void trim();
  friend class RatFunc;
};

// Element of Q(q) in lowest terms with monic denominator.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(long v);  // NOLINT(google-explicit-constructor)
  explicit RatFunc(const Rational& v);
  RatFunc(const LaurentInt& l);  // NOLINT(google-explicit-constructor)
  RatFunc(QPoly num, QPoly den);
  static RatFunc q_pow(int e);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  RatFunc inverse() const;
  RatFunc pow(int e) const;
  RatFunc bar() const;  // q -> q^-1
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  // Laurent form if the denominator is a power of q and coefficients are integral.
  std::optional<LaurentInt> to_laurent() const;
  Rational eval(const Rational& x) const;  // throws DenominatorVanishes

  std::string to_string() const;

 private:
  QPoly num_;
  QPoly den_ = QPoly::constant(1);
  void normalize();
};

// Element of Q(eta) = Q[x]/Phi_l, l odd >= 3. order()==0 marks a rational
// constant that adopts the order of the other operand.
class CycloNum {
 public:
  CycloNum() = default;
  CycloNum(long v);  // NOLINT(google-explicit-constructor)
  explicit CycloNum(const Rational& v);
  CycloNum(int l, QPoly residue);
  static CycloNum eta(int l);

  int order() const { return l_; }
  const QPoly& residue() const { return r_; }
  bool is_zero() const { return r_.is_zero(); }

  CycloNum operator-() const;
  CycloNum operator+(const CycloNum& o) const;
  CycloNum operator-(const CycloNum& o) const;
  CycloNum operator*(const CycloNum& o) const;
  CycloNum operator/(const CycloNum& o) const;
  CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
  CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
  CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }
  CycloNum inverse() const;
  CycloNum pow(long e) const;
  bool operator==(const CycloNum& o) const;
  bool operator!=(const CycloNum& o) const { return !(*this == o); }

  std::string to_string() const;  // in the symbol "eta"

 private:
  int l_ = 0;
  QPoly r_;
  static int join(int a, int b);
};

const QPoly& cyclotomic_polynomial(int l);
void require_odd_order(int l);

// q-combinatorics at q_i = q^sign.
LaurentInt gauss_int(long n, int sign = 1);
LaurentInt gauss_factorial(long n, int sign = 1);
// [m choose n]_{q_i} for any integer m and n >= 0; zero when 0 <= m < n.
LaurentInt gauss_binomial(long m, long n, int sign = 1);
// Value of the bracket element [K;c;t] on a vector where K acts by q_i^zval.
RatFunc kbracket_scalar(long zval, long c, long t, int sign = 1);

CycloNum evaluate_at_root(const RatFunc& x, int l);
CycloNum evaluate_at_root(const LaurentInt& x, int l);

}  // namespace qsuper
