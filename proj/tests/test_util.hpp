#pragma once

// Shared helpers for tests: seeded random complexes and invariant builders.

#include <random>
#include <vector>

#include "coxlie/exact.hpp"
#include "coxlie/simplicial_complex.hpp"

namespace coxlie::testutil {

// Random complex on exactly m vertices: a batch of random generating faces
// of size 2..4, downward closed.
inline SimplicialComplex random_complex(std::mt19937_64& rng, int m) {
    std::uniform_int_distribution<int> nfaces(0, 2 * m);
    std::uniform_int_distribution<int> card(2, std::min(4, m));
    std::uniform_int_distribution<int> vert(1, m);
    std::vector<std::vector<int>> faces;
    int n = nfaces(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<int> f;
        int c = card(rng);
        while (static_cast<int>(f.size()) < c) {
            int v = vert(rng);
            bool fresh = true;
            for (int u : f) fresh &= u != v;
            if (fresh) f.push_back(v);
        }
        faces.push_back(std::move(f));
    }
    return make_complex(m, faces);
}

inline AbelianInvariants inv(long free_rank, std::vector<long> torsion = {}) {
    AbelianInvariants a;
    a.free_rank = free_rank;
    for (long t : torsion) a.torsion.push_back(t);
    return a;
}

}  // namespace coxlie::testutil
