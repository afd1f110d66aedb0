#pragma once

// Integral homology: reduced simplicial homology of a complex, and the
// homology of the real moment-angle complex R_K computed two independent
// ways — by the subcomplex splitting formula and from the explicit cubical
// cell structure on R_K itself.

#include "coxlie/exact.hpp"
#include "coxlie/simplicial_complex.hpp"

namespace coxlie {

// Reduced homology of the augmented chain complex (the empty face is the one
// (-1)-cell, so the complex with no vertices has H~_{-1} = Z).
AbelianInvariants reduced_homology(const SimplicialComplex& k, int deg);

// H_deg(R_K; Z) as the direct sum over all vertex subsets J of the reduced
// homology of the full subcomplex K_J in degree deg - 1.  Requires m <= 16.
AbelianInvariants rmk_homology(const SimplicialComplex& k, int deg);

// H_deg(R_K; Z) from the cubical cell decomposition of R_K = (D^1, S^0)^K:
// one cell (I, eps) per face I (empty included) and sign vector eps on the
// complementary vertices.  Independent of the formula above; m <= 12.
AbelianInvariants cubical_rmk_homology(const SimplicialComplex& k, int deg);

}  // namespace coxlie
