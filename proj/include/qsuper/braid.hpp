#pragma once

#include "qsuper/pbw.hpp"

namespace qsuper {

struct BraidAtOddNode : DomainError {
  using DomainError::DomainError;
};

// Braid automorphisms T_{alpha_i} and their inverses, i != m. Both are even: no
// sign appears when they pass a product of odd elements.
Element braid_t(Algebra& A, int i, const Element& a);
Element braid_t_inv(Algebra& A, int i, const Element& a);

// E_ij (or F_ij) as (-1)^{j-i-1} T_i ... T_{k-1} T^{-1}_{j-1} ... T^{-1}_{k+1} applied to
// the simple root vector at k. Needs i <= k < j with no chain index equal to m.
Element root_vector_via_braid(Algebra& A, GenKind kind, int i, int j, int k);

}  // namespace qsuper
