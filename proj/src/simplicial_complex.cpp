#include "coxlie/simplicial_complex.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace coxlie {

namespace {

bool face_order(FaceMask a, FaceMask b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
}

}  // namespace

int SimplicialComplex::vertex_count() const { return std::popcount(ground_); }

int SimplicialComplex::dim() const {
    if (faces_.empty()) return -1;
    return std::popcount(faces_.back()) - 1;
}

std::vector<FaceMask> SimplicialComplex::faces_of_card(int card) const {
    std::vector<FaceMask> out;
    for (FaceMask f : faces_)
        if (std::popcount(f) == card) out.push_back(f);
    return out;
}

bool SimplicialComplex::has_face(FaceMask f) const {
    return std::binary_search(faces_.begin(), faces_.end(), f, face_order);
}

std::vector<std::pair<int, int>> SimplicialComplex::edges() const {
    std::vector<std::pair<int, int>> out;
    for (FaceMask f : faces_of_card(2)) {
        auto v = mask_vertices(f);
        out.emplace_back(v[0], v[1]);
    }
    return out;
}

SimplicialComplex make_complex(int m, const std::vector<std::vector<int>>& generating_faces) {
    if (m < 0 || m > 31) throw std::invalid_argument("vertex count must be between 0 and 31");
    std::vector<FaceMask> closed;
    FaceMask ground = m == 31 ? 0x7fffffffu : ((FaceMask{1} << m) - 1);
    for (int v = 1; v <= m; ++v) closed.push_back(FaceMask{1} << (v - 1));
    for (const auto& face : generating_faces) {
        FaceMask f = 0;
        for (int v : face) {
            if (v < 1 || v > m) throw std::invalid_argument("face vertex out of range");
            f |= FaceMask{1} << (v - 1);
        }
        // add every nonempty subset of f
        for (FaceMask s = f; s; s = (s - 1) & f) closed.push_back(s);
    }
    std::sort(closed.begin(), closed.end(), face_order);
    closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
    return SimplicialComplex(m, ground, std::move(closed));
}

SimplicialComplex flag_complex_of_graph(int m, const std::vector<std::pair<int, int>>& edges) {
    if (m < 0 || m > 24) throw std::invalid_argument("flag complex limited to m <= 24");
    std::vector<FaceMask> adj(static_cast<std::size_t>(m) + 1, 0);
    for (auto [i, j] : edges) {
        if (i < 1 || i > m || j < 1 || j > m || i == j)
            throw std::invalid_argument("bad edge");
        adj[static_cast<std::size_t>(i)] |= FaceMask{1} << (j - 1);
        adj[static_cast<std::size_t>(j)] |= FaceMask{1} << (i - 1);
    }
    FaceMask all = (FaceMask{1} << m) - 1;
    // is_clique via dynamic programming over masks: f is a clique iff
    // f minus its lowest vertex is one and that vertex sees the rest.
    std::vector<bool> clique(std::size_t{1} << m, false);
    std::vector<FaceMask> faces;
    clique[0] = true;
    for (FaceMask f = 1; f <= all; ++f) {
        FaceMask low = f & (~f + 1);
        FaceMask rest = f ^ low;
        int v = std::countr_zero(low) + 1;
        clique[f] = clique[rest] && (adj[static_cast<std::size_t>(v)] & rest) == rest;
        if (clique[f]) faces.push_back(f);
    }
    std::sort(faces.begin(), faces.end(), face_order);
    return SimplicialComplex(m, all, std::move(faces));
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, FaceMask j) {
    std::vector<FaceMask> faces;
    for (FaceMask f : k.faces())
        if ((f & j) == f) faces.push_back(f);
    return SimplicialComplex(k.m(), k.ground() & j, faces);
}

std::vector<FaceMask> connected_components(const SimplicialComplex& k) {
    std::vector<FaceMask> adj(32, 0);
    for (auto [i, j] : k.edges()) {
        adj[static_cast<std::size_t>(i)] |= FaceMask{1} << (j - 1);
        adj[static_cast<std::size_t>(j)] |= FaceMask{1} << (i - 1);
    }
    std::vector<FaceMask> comps;
    FaceMask seen = 0;
    for (int v = 1; v <= k.m(); ++v) {
        FaceMask vb = FaceMask{1} << (v - 1);
        if (!(k.ground() & vb) || (seen & vb)) continue;
        FaceMask comp = vb, frontier = vb;
        while (frontier) {
            FaceMask next = 0;
            for (int u = 1; u <= k.m(); ++u)
                if (frontier & (FaceMask{1} << (u - 1)))
                    next |= adj[static_cast<std::size_t>(u)];
            frontier = next & ~comp;
            comp |= frontier;
        }
        comps.push_back(comp);
        seen |= comp;
    }
    return comps;  // discovered in order of smallest vertex
}

std::vector<SimplicialComplex> all_complexes(int m) {
    if (m < 0 || m > 4)
        throw std::invalid_argument("exhaustive enumeration capped at m <= 4");
    // Candidate faces of cardinality >= 2, ordered so that every proper
    // subset of a candidate precedes it.
    std::vector<FaceMask> cand;
    for (FaceMask f = 0; f < (FaceMask{1} << m); ++f)
        if (std::popcount(f) >= 2) cand.push_back(f);
    std::sort(cand.begin(), cand.end(), face_order);

    std::vector<SimplicialComplex> out;
    std::vector<FaceMask> chosen;
    const auto emit = [&] {
        std::vector<std::vector<int>> faces;
        for (FaceMask f : chosen) faces.push_back(mask_vertices(f));
        out.push_back(make_complex(m, faces));
    };
    const auto closed_under = [&](FaceMask f) {
        for (int v = 1; v <= m; ++v) {
            const FaceMask sub = f & ~(FaceMask{1} << (v - 1));
            if (sub == f || std::popcount(sub) < 2) continue;
            if (std::find(chosen.begin(), chosen.end(), sub) == chosen.end())
                return false;
        }
        return true;
    };
    const auto dfs = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cand.size()) {
            emit();
            return;
        }
        self(self, idx + 1);
        if (closed_under(cand[idx])) {
            chosen.push_back(cand[idx]);
            self(self, idx + 1);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

bool is_flag(const SimplicialComplex& k) {
    // Every set of pairwise adjacent vertices must be a face, i.e. the
    // complex coincides with the flag complex of its own 1-skeleton.
    SimplicialComplex flag = flag_complex_of_graph(k.m(), k.edges());
    for (FaceMask f : flag.faces())
        if ((f & k.ground()) == f && !k.has_face(f)) return false;
    return true;
}

FaceMask vertex_mask(const std::vector<int>& vertices) {
    FaceMask f = 0;
    for (int v : vertices) {
        assert(v >= 1 && v <= 31);
        f |= FaceMask{1} << (v - 1);
    }
    return f;
}

std::vector<int> mask_vertices(FaceMask f) {
    std::vector<int> out;
    for (int v = 1; f; ++v, f >>= 1)
        if (f & 1) out.push_back(v);
    return out;
}

}  // namespace coxlie
