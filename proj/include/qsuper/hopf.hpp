#pragma once

#include <map>
#include <vector>

#include "qsuper/pbw.hpp"

namespace qsuper {

// Element of the k-fold tensor power of U_q, spanned by tuples of PBW monomials.
// Products follow the super sign rule (a x b)(c x d) = (-1)^{|b||c|} ac x bd.
class TensorElement {
 public:
  using Key = std::vector<Monomial>;
  using Terms = std::map<Key, RatFunc>;

  TensorElement() = default;
  TensorElement(const Shape& s, int arity) : shape_(s), arity_(arity) {}

  const Shape& shape() const { return shape_; }
  int arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  void add_term(const Key& k, const RatFunc& c);
  RatFunc coeff(const Key& k) const;

  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  TensorElement scaled(const RatFunc& c) const;
  TensorElement& operator+=(const TensorElement& o);
  bool operator==(const TensorElement& o) const {
    return shape_ == o.shape_ && arity_ == o.arity_ && terms_ == o.terms_;
  }
  bool operator!=(const TensorElement& o) const { return !(*this == o); }

 private:
  Shape shape_;
  int arity_ = 2;
  Terms terms_;
  void check(const TensorElement& o) const;
};

// Coproduct, counit and antipode of U_q(gl(m,n)). Shares the straightening engine
// of the algebra it wraps, so the same threading rules apply.
class Hopf {
 public:
  explicit Hopf(Algebra& A) : A_(A) {}
  Algebra& algebra() { return A_; }

  // a_1 x ... x a_k
  TensorElement tensor(const std::vector<Element>& legs) const;
  TensorElement tensor(const Element& a, const Element& b) const { return tensor({a, b}); }
  TensorElement tensor_multiply(const TensorElement& x, const TensorElement& y);

  TensorElement delta(const Element& a);
  RatFunc counit(const Element& a) const;
  Element antipode(const Element& a);

  // leg maps on the tensor square
  TensorElement delta_on_leg(const TensorElement& x, int leg);  // result has arity + 1
  Element multiply_legs(const TensorElement& x);                 // m: a x b -> ab
  TensorElement antipode_on_leg(const TensorElement& x, int leg);
  Element counit_on_leg(const TensorElement& x, int leg);        // arity 2 only
  TensorElement omega_bar(const TensorElement& x) const;         // a x b -> Omega(b) x Omega(a)

 private:
  Algebra& A_;
  std::map<std::pair<int, int>, TensorElement> atom_memo_;  // (0=E/1=F, rank) -> Delta

  const TensorElement& delta_atom(GenKind kind, int r);
  TensorElement delta_monomial(const Monomial& m);
};

}  // namespace qsuper
