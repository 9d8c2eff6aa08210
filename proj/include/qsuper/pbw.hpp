#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qsuper/rootdata.hpp"
#include "qsuper/scalars.hpp"

namespace qsuper {

// Coefficients of the straightening engine: Z[q,q^-1] localized at q-1 and q+1.
// Stored as num / ((q-1)^a (q+1)^b) with the fraction reduced.
class FracCoef {
 public:
  FracCoef() = default;
  FracCoef(LaurentInt num, int a = 0, int b = 0);  // NOLINT(google-explicit-constructor)
  static std::optional<FracCoef> from_rat(const RatFunc& r);
  static FracCoef inv_q_minus_qinv();  // 1/(q - q^-1)

  bool is_zero() const { return num_.is_zero(); }
  RatFunc to_rat() const;
  FracCoef operator-() const;
  FracCoef operator+(const FracCoef& o) const;
  FracCoef operator-(const FracCoef& o) const { return *this + (-o); }
  FracCoef operator*(const FracCoef& o) const;
  FracCoef& operator+=(const FracCoef& o) { return *this = *this + o; }
  FracCoef bar() const;
  bool operator==(const FracCoef& o) const { return num_ == o.num_ && a_ == o.a_ && b_ == o.b_; }

 private:
  LaurentInt num_;
  int a_ = 0;
  int b_ = 0;
  void reduce();
};

// PBW monomial F_1^{d'} F_0^{psi'} K_mu E_0^{psi} E_1^{d}. Exponents are indexed by
// root rank (the E-side order of RootData); the F-part is read in reverse rank order.
class Monomial {
 public:
  Monomial() = default;
  Monomial(int R, int N) : R_(R), N_(N), v_(2 * R + N, 0) {}

  int R() const { return R_; }
  int N() const { return N_; }
  int f(int r) const { return v_[r]; }
  int k(int j) const { return v_[R_ + j]; }  // exponent of K_{j+1}
  int e(int r) const { return v_[R_ + N_ + r]; }
  int& f(int r) { return v_[r]; }
  int& k(int j) { return v_[R_ + j]; }
  int& e(int r) { return v_[R_ + N_ + r]; }
  IntVec kvec() const;
  void set_k(const IntVec& mu);

  bool has_e() const;
  bool has_f() const;
  bool is_k_only() const { return !has_e() && !has_f(); }
  bool is_identity() const;
  const std::vector<int>& raw() const { return v_; }

  bool operator<(const Monomial& o) const { return v_ < o.v_; }
  bool operator==(const Monomial& o) const { return v_ == o.v_; }
  bool operator!=(const Monomial& o) const { return v_ != o.v_; }

 private:
  int R_ = 0;
  int N_ = 0;
  std::vector<int> v_;
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const;
};

class Element {
 public:
  using Terms = std::map<Monomial, RatFunc>;
  Element() = default;
  explicit Element(const Shape& s) : shape_(s) {}

  const Shape& shape() const { return shape_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  void add_term(const Monomial& m, const RatFunc& c);
  RatFunc coeff(const Monomial& m) const;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element scaled(const RatFunc& c) const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  bool operator==(const Element& o) const { return shape_ == o.shape_ && terms_ == o.terms_; }
  bool operator!=(const Element& o) const { return !(*this == o); }

 private:
  Shape shape_;
  Terms terms_;
};

enum class GenKind { E, F };

struct NotIntegral : std::domain_error {
  using std::domain_error::domain_error;
};

// Basis key of the divided-power A-form basis: F-part and E-part exponents by root
// rank, and per K_{alpha_i} the pair (delta_i, t_i) for K^delta [K;0;t].
struct AFormKey {
  std::vector<int> f;
  std::vector<int> delta;
  std::vector<int> t;
  std::vector<int> e;
  bool operator<(const AFormKey& o) const;
  bool operator==(const AFormKey& o) const;
};

// Description of an algebra map for apply_map: images of the simple generators and
// of K-monomials. Composite root vectors are mapped through their defining
// recursion.
struct MapSpec {
  std::function<Element(GenKind, int)> simple;  // image of E_{alpha_i} or F_{alpha_i}
  std::function<Element(const IntVec&)> kimage;
  bool anti = false;    // reverses products
  bool graded = false;  // anti map picks up (-1)^{|x||y|}
  bool conj = false;    // q -> q^-1 on scalars
};

// Straightening engine for U_q(gl(m,n)). Holds memo tables, so one instance should
// not be shared between threads.
class Algebra {
 public:
  explicit Algebra(Shape s);
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  const RootData& rd() const { return rd_; }
  const Shape& shape() const { return rd_.shape(); }
  int R() const { return rd_.num_roots(); }
  int N() const { return rd_.N(); }

  // constructors
  Monomial identity_monomial() const { return Monomial(R(), N()); }
  Element zero() const { return Element(shape()); }
  Element one() const;
  Element scalar(const RatFunc& c) const;
  Element from_monomial(const Monomial& m, const RatFunc& c = RatFunc(1)) const;
  Element generator(GenKind kind, int i, int j) const;
  Element E(int i, int j) const { return generator(GenKind::E, i, j); }
  Element F(int i, int j) const { return generator(GenKind::F, i, j); }
  Element Esimple(int i) const { return E(i, i + 1); }
  Element Fsimple(int i) const { return F(i, i + 1); }
  Element k_monomial(const IntVec& mu) const;
  Element K(int j, int power = 1) const;
  IntVec k_alpha_vec(int i) const;  // exponent vector of K_{alpha_i}
  Element Kalpha(int i, int power = 1) const { return k_monomial(scaled_vec(k_alpha_vec(i), power)); }
  Element divided_power(GenKind kind, int i, int j, int n) const;
  Element kbracket_element(int i, long c, long t) const;

  // arithmetic
  Element multiply(const Element& a, const Element& b);
  Element product(const std::vector<Element>& factors);
  Element power(const Element& a, int n);
  Element commutator(const Element& a, const Element& b, bool super = true);

  // gradings
  int parity(const Monomial& m) const;
  IntVec weight(const Monomial& m) const;  // epsilon coordinates
  // parity of a homogeneous element, -1 if not homogeneous
  int parity(const Element& a) const;

  // maps
  Element omega(const Element& a) const;
  Element psi(const Element& a);
  Element apply_map(const Element& a, const MapSpec& ms);
  Element ef_closed_bracket(int i, int j, int c) const;  // closed form of [E_ij, F_{c,c+1}]

  // A-form
  std::map<AFormKey, LaurentInt> a_form_coords(const Element& a) const;
  // coordinates of K_{alpha}^a in the basis K^delta [K;0;t] at q_i = q^sign
  std::vector<std::tuple<int, int, RatFunc>> k_power_coords(int a, int sign) const;

  static IntVec scaled_vec(IntVec v, long s);

  // engine statistics (for tests on termination)
  size_t cache_size() const;
  long steps() const { return steps_; }

 private:
  using EVec = std::vector<int>;
  struct EVecHash {
    size_t operator()(const EVec& v) const;
  };
  using ETerms = std::vector<std::pair<EVec, LaurentInt>>;
  using CTerms = std::vector<std::pair<Monomial, FracCoef>>;
  struct PairKeyHash {
    size_t operator()(const std::pair<Monomial, Monomial>& p) const;
  };
  struct AtomKeyHash {
    size_t operator()(const std::pair<int, Monomial>& p) const;
  };

  RootData rd_;
  long steps_ = 0;

  std::unordered_map<EVec, ETerms, EVecHash> e_insert_memo_;
  std::unordered_map<std::pair<Monomial, Monomial>, CTerms, PairKeyHash> mono_memo_;
  std::unordered_map<std::pair<int, Monomial>, CTerms, AtomKeyHash> eatom_memo_;
  std::map<std::pair<int, int>, CTerms> cross_memo_;

  LaurentInt qpow_i(int idx, int e) const { return LaurentInt::q_pow(rd_.qsign(idx) * e); }
  std::vector<std::pair<LaurentInt, std::vector<int>>> swap_e(int y, int x) const;
  const ETerms& e_insert(const EVec& m, int x);
  ETerms e_mul(const EVec& a, const EVec& b);
  ETerms f_mul(const EVec& a, const EVec& b);
  IntVec evec_weight(const EVec& v) const;
  long pair_mu(const IntVec& mu, const IntVec& beta) const;

  const CTerms& mono_mul(const Monomial& a, const Monomial& b);
  const CTerms& e_atom_mul(int y, const Monomial& b);
  const CTerms& cross(int y, int x);
  Monomial e_atom(int r) const;
  Monomial f_atom(int r) const;
  static void accumulate(std::unordered_map<Monomial, FracCoef, MonomialHash>& acc, const Monomial& m,
                         const FracCoef& c);
  static CTerms to_terms(std::unordered_map<Monomial, FracCoef, MonomialHash>& acc);
  Element simple_image(GenKind kind, int r, const MapSpec& ms,
                       std::map<std::pair<int, int>, Element>& memo);
};

}  // namespace qsuper
