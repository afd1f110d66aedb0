#pragma once

// Words in a right-angled Coxeter group RC_K: one involutive generator per
// vertex of K, with g_i g_j = g_j g_i exactly when {i, j} is an edge.  The
// normal form is the lexicographically least geodesic representative; two
// words are equal in the group iff their normal forms coincide.

#include <vector>

#include "coxlie/free_word.hpp"
#include "coxlie/simplicial_complex.hpp"

namespace coxlie {

// A word is a sequence of generator indices (every generator is its own
// inverse, so no signs).
using CoxWord = std::vector<int>;

CoxWord cox_inverse(const CoxWord& w);
CoxWord cox_mul(const CoxWord& a, const CoxWord& b);
CoxWord cox_commutator(const CoxWord& a, const CoxWord& b);  // a^-1 b^-1 a b
CoxWord cox_simple_nested(const std::vector<int>& gens);     // left-nested
// Forgets signs: every letter g_i^{+-1} becomes g_i.
CoxWord cox_from_free(const FreeWord& w);

// Geodesic reduction (letter-pair deletion) followed by the greedy
// smallest-frontable-letter pass; the result is the unique lexicographically
// least geodesic for the element.
CoxWord normal_form(const SimplicialComplex& k, CoxWord w);

bool equal_in_racg(const SimplicialComplex& k, const CoxWord& a, const CoxWord& b);

// (g_i, g_j, g_i) = (g_i, g_j, g_j) = (g_j, g_i)^2 in RC_K.
bool verify_square_identity(const SimplicialComplex& k, int i, int j);
// (g_i, g_j, g_i, g_i) = (g_i, g_j)^4 = (g_i, g_j, g_i, g_j) in RC_K.
bool verify_degree4_expansion(const SimplicialComplex& k, int i, int j);

}  // namespace coxlie
