#include "coxlie/gscox.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace coxlie {

std::vector<int> CommutatorPattern::as_tuple() const {
    std::vector<int> t{i, j};
    t.insert(t.end(), ks.begin(), ks.end());
    return t;
}

std::vector<CommutatorPattern> gscox_generators(const SimplicialComplex& k) {
    if (k.vertex_count() > 16)
        throw std::invalid_argument("gscox_generators limited to m <= 16");
    std::vector<CommutatorPattern> out;
    FaceMask g = k.ground();
    for (FaceMask s = g;; s = (s - 1) & g) {
        if (std::popcount(s) >= 2) {
            auto verts = mask_vertices(s);
            int j = verts.back();
            for (FaceMask comp : connected_components(full_subcomplex(k, s))) {
                if (comp & (FaceMask{1} << (j - 1))) continue;
                CommutatorPattern p;
                p.i = mask_vertices(comp).front();
                p.j = j;
                for (auto it = verts.rbegin(); it != verts.rend(); ++it)
                    if (*it != p.i && *it != j) p.ks.push_back(*it);
                out.push_back(std::move(p));
            }
        }
        if (s == 0) break;
    }
    std::sort(out.begin(), out.end(), [](const CommutatorPattern& a, const CommutatorPattern& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        if (a.j != b.j) return a.j < b.j;
        if (a.i != b.i) return a.i < b.i;
        return a.ks < b.ks;
    });
    return out;
}

}  // namespace coxlie
