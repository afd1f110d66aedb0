#pragma once

// Nilpotent quotients of finitely presented groups via weighted polycyclic
// presentations.  The engine computes, class by class, a consistent pc
// presentation of G / gamma_{c+1}(G) whose generators are graded by the
// lower central series, together with the isomorphism type of every layer
// gamma_k / gamma_{k+1}.
//
// Each covering step attaches a central tail coordinate to every relation
// that is not the definition of a generator (powers, commutators of weight
// up to the new class, and epimorphism images), evaluates the weighted
// consistency battery and the presentation relators, and eliminates the
// tails by a Hermite normal form of the resulting linear system.  Surviving
// tails become the new generators of the next weight layer.

#include <optional>
#include <vector>

#include "coxlie/exact.hpp"
#include "coxlie/free_word.hpp"
#include "coxlie/pc.hpp"
#include "coxlie/simplicial_complex.hpp"

namespace coxlie {

struct GroupPresentation {
    int generators = 0;
    std::vector<FreeWord> relators;
};

GroupPresentation free_presentation(int m);

// The right-angled Coxeter group of the 1-skeleton of k: one involution per
// vertex, one commuting relation per edge.
GroupPresentation racg_presentation(const SimplicialComplex& k);

// Largest admissible nilpotency class (5, or less if RACG_LCS_MAX_CLASS is
// set in the environment).
int class_cap();

// Pc presentation of g / gamma_{c+1}(g), 1 <= c <= class_cap().
PcPresentation nilpotent_quotient(const GroupPresentation& g, int c);

// Dimensions over GF(2) of the graded layers gamma_k / gamma_{k+1} of the
// right-angled Coxeter group of k, for k = 1..c.  Every layer is elementary
// abelian, so dimensions determine the groups.
std::vector<long> lcs_dims(const SimplicialComplex& k, int c);

// Coordinates of w * gamma_{k+1} with respect to the weight-k generators of
// pc, or nullopt if w does not lie in gamma_k.  Requires k <= pc.cls.
std::optional<std::vector<Exp>> express(const PcPresentation& pc,
                                        const FreeWord& w, int k);

// Checks that the given simple nested commutators (each a tuple of vertex
// labels, left-nested) form a GF(2) basis of gamma_deg / gamma_{deg+1} for
// the right-angled Coxeter group of k.
bool verify_basis_claim(const SimplicialComplex& k, int deg,
                        const std::vector<std::vector<int>>& commutators);

// Whether lhs == rhs modulo gamma_c of the ambient free group.
bool verify_congruence(const FreeWord& lhs, const FreeWord& rhs, int c);

}  // namespace coxlie
