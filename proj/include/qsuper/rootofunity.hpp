#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsuper/module.hpp"

namespace qsuper {

struct OutOfRestrictedRange : DomainError {
  using DomainError::DomainError;
};

// Element of U_A specialized at q = eta, kept in the divided-power A-form basis.
struct SpecializedElement {
  Shape shape;
  int order = 3;
  std::map<AFormKey, CycloNum> terms;
  bool is_zero() const { return terms.empty(); }
};

SpecializedElement specialize_element(const Algebra& A, const Element& a, int l);

struct SmallGroupCounts {
  long u_plus = 0;       // 'u^+ : E_0^(psi') E_1^d', psi' in [0,l)
  long u_zero = 0;       // 'u^0 : prod K_{alpha_i}^{N_i}, N_i in [0,2l)
  long u = 0;            // 'u
  long tilde_zero = 0;   // 'u~^0 : prod [K_{alpha_i};0;t_i], t_i in [0,l)
  long tilde_u = 0;      // 'u~
};

// Sizes of the listed bases, each factor enumerated key by key.
SmallGroupCounts small_group_counts(const Shape& s, int l);

// Kac lattice F_1^d (x) F_0^(psi) v specialized at eta; carries divided powers up to l.
WeightModule<CycloNum> specialize_kac(Algebra& A, const IntVec& lambda, int l);
// Simple quotient of the specialized lattice with highest weight z (z-coordinates).
WeightModule<CycloNum> simple_at_root(Algebra& A, const IntVec& z, int l);
// Same, for z in the restricted range only.
WeightModule<CycloNum> restricted_simple(Algebra& A, const IntVec& z, int l);

// One relation instance of the classical presentation, checked at q = 1 modulo
// K_{alpha_i} - 1. Instances with counted == false are diagnostics.
struct ClassicalInstance {
  std::string family;
  std::string name;
  bool holds = false;
  bool counted = true;
};
std::vector<ClassicalInstance> classical_limit_check(Algebra& A);
// Zero in U_1 after dropping K_{alpha_i} - 1: group A-form coordinates by (f, t, e) at q = 1.
bool vanishes_classically(const Algebra& A, const Element& d);

// Properties of the simple module with restricted highest weight z.
struct RestrictedReport {
  IntVec z;
  long dim = 0;
  bool f_l_kills_top = false;     // F_i^(l) x = 0 for even i
  long even_kernel_dim = 0;       // joint kernel of E_i, i != m
  bool even_kernel_is_line = false;
  long full_kernel_dim = 0;       // joint kernel of every E_i
  bool small_restriction_simple = false;
  bool generated_by_small = false;
};
RestrictedReport restricted_report(Algebra& A, const IntVec& z, int l);

// char L(z) against char L(z') * char L(l z''), plus simplicity of the tensor product.
struct TensorTheoremReport {
  IntVec z, z1, z2;
  long dim = 0, dim_tensor = 0;
  bool characters_equal = false;
  bool tensor_simple = false;
};
TensorTheoremReport tensor_theorem_report(Algebra& A, const IntVec& z, int l);

// L(l z'): E_i, F_i act by 0, K_{alpha_j} by 1, dimension is the classical Weyl
// dimension for z', and the l-th divided powers generate it from the top.
struct FrobeniusTwistReport {
  IntVec z;
  long dim = 0;
  long weyl = 0;
  bool simple_generators_vanish = false;
  bool torus_trivial = false;
  bool generated_by_divided = false;
};
FrobeniusTwistReport frobenius_twist_report(Algebra& A, const IntVec& zprime, int l);

}  // namespace qsuper
