#pragma once

// Regression suite over the library's headline results: dimension tables,
// explicit bases of graded components, universal commutator identities,
// congruences, homology cross-checks, and the GF(2) Lie algebra comparison.
// Claims are declarative table entries; each produces one report.

#include <string>
#include <vector>

#include "coxlie/simplicial_complex.hpp"

namespace coxlie {

struct ClaimReport {
    std::string id;
    bool passed = false;
    std::string witness;  // the computed values backing the verdict
};

// All claim ids, in execution order.
std::vector<std::string> claim_ids();

// Runs every claim whose id starts with `scope` (empty scope = all claims).
// Deterministic: fuzzed sub-suites use fixed seeds.
std::vector<ClaimReport> run_all(const std::string& scope = "");

// Re-checks a basis claim after relabeling the vertices: tuple entries are
// mapped through `permutation` (permutation[v-1] = image of v), which must
// preserve the complex.
bool symmetry_check(const SimplicialComplex& k, int degree,
                    const std::vector<std::vector<int>>& family,
                    const std::vector<int>& permutation);

}  // namespace coxlie
