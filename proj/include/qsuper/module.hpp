#pragma once

#include <compare>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "qsuper/linalg.hpp"
#include "qsuper/pbw.hpp"
#include "qsuper/relations.hpp"

namespace qsuper {

struct NonDominant : DomainError {
  using DomainError::DomainError;
};
struct NotHighestWeight : DomainError {
  using DomainError::DomainError;
};

// Operator label: E_{alpha_i}^{(power)} or F_{alpha_i}^{(power)}.
struct OpKey {
  GenKind kind = GenKind::E;
  int i = 1;
  int power = 1;
  auto operator<=>(const OpKey&) const = default;
  std::string to_string() const;
};

// Scalar conversion from Q(q) into the module's field (identity, or q -> eta).
template <class F>
F to_field(const RatFunc& x, int order);

// Finite-dimensional weight module with a basis of weight vectors. Weights are
// epsilon coordinates; K_j acts on a vector of weight mu by q_j^{mu_j}. Only the
// simple generators (and optionally even divided powers) are stored; every other
// element acts through the root-vector recursion.
template <class F>
class WeightModule {
 public:
  using Vec = SVec<F>;
  using Matrix = std::vector<Vec>;  // columns

  WeightModule() : rd_(Shape(1, 1)) {}
  explicit WeightModule(Shape s, int order = 0) : rd_(s), order_(order) {}

  const Shape& shape() const { return rd_.shape(); }
  const RootData& rd() const { return rd_; }
  int order() const { return order_; }  // 0 at generic q
  size_t dim() const { return weights_.size(); }

  int add_basis(std::string label, IntVec weight, int parity);
  const IntVec& weight(int idx) const { return weights_[idx]; }
  int parity(int idx) const { return parities_[idx]; }
  const std::string& label(int idx) const { return labels_[idx]; }
  IntVec z_weight(int idx) const { return rd_.weight_to_z(weights_[idx]); }
  int top() const { return top_; }
  void set_top(int t) { top_ = t; }

  Matrix& op(const OpKey& k) { return ops_[k]; }
  const Matrix& op(const OpKey& k) const { return ops_.at(k); }
  const std::map<OpKey, Matrix>& ops() const { return ops_; }
  bool has_op(const OpKey& k) const { return ops_.count(k) > 0; }
  void set_op(const OpKey& k, Matrix m) { ops_[k] = std::move(m); }

  F qpow(long e) const;
  F k_eigen(const IntVec& mu, int idx) const { return qpow(rd_.bilinear(mu, weights_[idx])); }
  F kalpha_eigen(int i, int idx) const { return qpow(rd_.pair_root(weights_[idx], i, i + 1)); }

  Vec apply(const OpKey& k, const Vec& v) const;
  static Vec unit(int idx) { return Vec{{idx, F(1)}}; }

  std::map<IntVec, std::vector<int>> weight_spaces() const;

 private:
  RootData rd_;
  int order_ = 0;
  std::vector<IntVec> weights_;
  std::vector<int> parities_;
  std::vector<std::string> labels_;
  std::map<OpKey, Matrix> ops_;
  int top_ = -1;
};

using Character = std::map<IntVec, long>;  // z-weight -> multiplicity

// Action of an algebra element (straightened or not) on a vector.
template <class F>
SVec<F> act(const WeightModule<F>& M, const Element& a, const SVec<F>& v);
template <class F>
SVec<F> act_monomial(const WeightModule<F>& M, const Monomial& m, const SVec<F>& v);
template <class F>
SVec<F> act_root_vector(const WeightModule<F>& M, GenKind kind, int i, int j, const SVec<F>& v);

// Names of relations that fail on some of the given basis vectors (all if empty).
template <class F>
std::vector<std::string> relation_failures(const WeightModule<F>& M, const std::vector<Relation>& rels,
                                           const std::vector<int>& vectors = {});

// Joint kernel of the given operators, weight space by weight space.
template <class F>
std::vector<std::pair<IntVec, SVec<F>>> joint_kernel(const WeightModule<F>& M, const std::vector<OpKey>& ops);
// Vectors killed by every raising operator stored in M.
template <class F>
std::vector<std::pair<IntVec, SVec<F>>> singular_vectors(const WeightModule<F>& M);

// Span of everything reachable from gens under the operators (all of M's if empty).
template <class F>
Echelon<F> submodule(const WeightModule<F>& M, const std::vector<SVec<F>>& gens,
                     const std::vector<OpKey>& ops = {});
template <class F>
WeightModule<F> quotient(const WeightModule<F>& M, const Echelon<F>& S);
template <class F>
WeightModule<F> simple_head(const WeightModule<F>& M, bool check_generated = true);
// Module structure on an invariant subspace spanned by weight vectors; the basis
// is the echelon rows, the top is the row through M's top vector if present.
template <class F>
WeightModule<F> restrict_to(const WeightModule<F>& M, const Echelon<F>& S);

template <class F>
Character character(const WeightModule<F>& M);
Character convolve(const Character& a, const Character& b);

// Tensor product through the coproduct, with the super sign on the second leg.
template <class F>
WeightModule<F> tensor_module(const WeightModule<F>& M, const WeightModule<F>& N);

WeightModule<CycloNum> specialize(const WeightModule<RatFunc>& M, int l);

// One-dimensional module of weight zero.
template <class F>
WeightModule<F> trivial_module(Shape s, int order = 0);

// Words in the xi's modulo the Serre-type ideal, truncated at degree depth, with
// the free-module action formulas. Highest weight c_j = q_j^{lambda_j}.
WeightModule<RatFunc> verma_model(const Shape& s, const IntVec& lambda, int depth);
int word_degree(const WeightModule<RatFunc>& verma, int idx);

// Even Verma module truncated at height D, basis F_0^{(psi)} v.
WeightModule<RatFunc> even_verma(Algebra& A, const IntVec& lambda, int D, int max_div = 1);
// Simple module of the even part; dimension matches the Weyl formula.
WeightModule<RatFunc> simple_even_module(Algebra& A, const IntVec& lambda, int max_div = 1);
// Kac module F_1^d (x) L_0(lambda). max_div > 1 adds even divided powers up to that order.
WeightModule<RatFunc> kac_module(Algebra& A, const IntVec& lambda, int max_div = 1);

// height of lambda - mu in simple roots
long height_of(const IntVec& lambda, const IntVec& mu);

}  // namespace qsuper
