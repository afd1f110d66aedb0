#pragma once

// Combinatorial generating patterns for H_1 of the real moment-angle complex:
// tuples (i, j, k_1, ..., k_{l-2}) with i < j > k_1 > k_2 > ..., every k_s
// distinct from i, such that inside the full subcomplex on the tuple's
// support the component of i does not contain j and i is the smallest vertex
// of its component.  One pattern per such component, so the total count is
// the sum over all vertex subsets J of (number of components of K_J minus 1).

#include <vector>

#include "coxlie/simplicial_complex.hpp"

namespace coxlie {

struct CommutatorPattern {
    int i = 0, j = 0;
    std::vector<int> ks;  // strictly decreasing, each < j and != i

    std::vector<int> as_tuple() const;  // (i, j, k_1, ..., k_{l-2})
    int length() const { return 2 + static_cast<int>(ks.size()); }

    bool operator==(const CommutatorPattern&) const = default;
};

// Patterns sorted by (length, j, i, k_1, k_2, ...).  Requires m <= 16.
std::vector<CommutatorPattern> gscox_generators(const SimplicialComplex& k);

}  // namespace coxlie
