#include "coxlie/cox_word.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace coxlie {

namespace {

// Adjacency closure over vertex indices; adj[i] bit (j-1) set iff {i,j} edge.
std::vector<FaceMask> adjacency(const SimplicialComplex& k) {
    std::vector<FaceMask> adj(static_cast<std::size_t>(k.m()) + 1, 0);
    for (auto [i, j] : k.edges()) {
        adj[static_cast<std::size_t>(i)] |= FaceMask{1} << (j - 1);
        adj[static_cast<std::size_t>(j)] |= FaceMask{1} << (i - 1);
    }
    return adj;
}

bool commutes(const std::vector<FaceMask>& adj, int i, int j) {
    return (adj[static_cast<std::size_t>(i)] >> (j - 1)) & 1u;
}

}  // namespace

CoxWord cox_inverse(const CoxWord& w) { return {w.rbegin(), w.rend()}; }

CoxWord cox_mul(const CoxWord& a, const CoxWord& b) {
    CoxWord r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

CoxWord cox_commutator(const CoxWord& a, const CoxWord& b) {
    return cox_mul(cox_mul(cox_inverse(a), cox_inverse(b)), cox_mul(a, b));
}

CoxWord cox_simple_nested(const std::vector<int>& gens) {
    assert(!gens.empty());
    CoxWord w{gens[0]};
    for (std::size_t t = 1; t < gens.size(); ++t)
        w = cox_commutator(w, CoxWord{gens[t]});
    return w;
}

CoxWord cox_from_free(const FreeWord& w) {
    CoxWord r;
    for (const FreeLetter& l : w.letters()) r.push_back(l.gen);
    return r;
}

CoxWord normal_form(const SimplicialComplex& k, CoxWord w) {
    for (int v : w)
        if (v < 1 || v > k.m() || !(k.ground() & (FaceMask{1} << (v - 1))))
            throw std::invalid_argument("word uses a generator outside the complex");
    auto adj = adjacency(k);

    // Deletion condition: while some pair of equal letters has only letters
    // commuting with it in between, erase the pair.  A word admitting no such
    // pair is geodesic.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t p = 0; p < w.size() && !changed; ++p) {
            for (std::size_t q = p + 1; q < w.size(); ++q) {
                if (w[p] == w[q]) {
                    bool clear = true;
                    for (std::size_t t = p + 1; t < q && clear; ++t)
                        clear = commutes(adj, w[t], w[p]);
                    if (clear) {
                        w.erase(w.begin() + static_cast<std::ptrdiff_t>(q));
                        w.erase(w.begin() + static_cast<std::ptrdiff_t>(p));
                        changed = true;
                        break;
                    }
                }
                if (!commutes(adj, w[q], w[p]) && w[p] != w[q]) break;
            }
        }
    }

    // Among all geodesics (reachable by swapping adjacent commuting letters)
    // emit greedily: repeatedly take the smallest letter that can be moved to
    // the front, i.e. commutes with everything before it.
    CoxWord out;
    out.reserve(w.size());
    while (!w.empty()) {
        std::size_t best = 0;
        bool have = false;
        for (std::size_t p = 0; p < w.size(); ++p) {
            bool frontable = true;
            for (std::size_t t = 0; t < p && frontable; ++t)
                frontable = commutes(adj, w[t], w[p]);
            if (frontable && (!have || w[p] < w[best])) {
                best = p;
                have = true;
            }
        }
        assert(have);
        out.push_back(w[best]);
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return out;
}

bool equal_in_racg(const SimplicialComplex& k, const CoxWord& a, const CoxWord& b) {
    return normal_form(k, a) == normal_form(k, b);
}

bool verify_square_identity(const SimplicialComplex& k, int i, int j) {
    CoxWord lhs = cox_simple_nested({i, j, i});
    CoxWord mid = cox_simple_nested({i, j, j});
    CoxWord sq = cox_mul(cox_commutator({j}, {i}), cox_commutator({j}, {i}));
    return equal_in_racg(k, lhs, mid) && equal_in_racg(k, mid, sq);
}

bool verify_degree4_expansion(const SimplicialComplex& k, int i, int j) {
    CoxWord lhs = cox_simple_nested({i, j, i, i});
    CoxWord mid = cox_simple_nested({i, j, i, j});
    CoxWord c = cox_commutator({i}, {j});
    CoxWord pw = cox_mul(cox_mul(c, c), cox_mul(c, c));
    return equal_in_racg(k, lhs, pw) && equal_in_racg(k, mid, pw);
}

}  // namespace coxlie
