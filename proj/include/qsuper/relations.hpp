#pragma once

#include <string>
#include <vector>

#include "qsuper/pbw.hpp"

namespace qsuper {

// A relation kept as an unevaluated sum of scalar-weighted products, so that maps
// and module actions can be applied factor by factor.
struct RelTerm {
  RatFunc coeff;
  std::vector<Element> factors;
};

struct Relation {
  std::string name;
  std::vector<RelTerm> terms;
};

// Presentation by all root vectors: odd squares, supercommutation of nested and
// disjoint roots, same-row and same-column q-commutation, composite recursion for
// every middle index, torus relations, simple E-F brackets, torus-E/F rules.
std::vector<Relation> root_vector_relations(const Algebra& A);

// Quantum Serre relations of degree three and the odd Serre relation, the latter
// in both its bracket and its expanded five-term form.
std::vector<Relation> serre_relations(const Algebra& A);

std::vector<Relation> all_relations(const Algebra& A);

// The E-F cross relation with the sign (-1)^{delta_im} for every j.
Relation ef_cross_sign_by_row(const Algebra& A, int i, int j);

Element evaluate(Algebra& A, const Relation& r);

}  // namespace qsuper

namespace qsuper {

// Divided-power identities among root vectors for every valid index triple and
// exponents up to max_pow: expansions of composite divided powers through a middle
// index, the exchange of the two middle factors, the straightening of
// E_cj^(N) E_ic^(M), the crossing bracket, and the pairwise commutation laws of
// divided powers.
std::vector<Relation> divided_power_identities(const Algebra& A, int max_pow);

// E_{alpha_i}^(N) F_{alpha_i}^(M) expanded through bracket elements, and the
// shifts of bracket elements past divided powers.
std::vector<Relation> kac_formula_identities(const Algebra& A, int max_pow);
std::vector<Relation> bracket_shift_identities(const Algebra& A, int max_pow);

}  // namespace qsuper
