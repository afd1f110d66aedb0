#include "coxlie/homology.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace coxlie {

namespace {

// Boundary matrix from faces of the given cardinality to faces one smaller;
// cardinality 1 maps vertices to the single empty face.
IntMatrix simplicial_boundary(const SimplicialComplex& k, int card) {
    assert(card >= 1);
    std::vector<FaceMask> cols = k.faces_of_card(card);
    std::vector<FaceMask> rows = card == 1 ? std::vector<FaceMask>{0}
                                           : k.faces_of_card(card - 1);
    IntMatrix d(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        auto verts = mask_vertices(cols[c]);
        for (std::size_t t = 0; t < verts.size(); ++t) {
            FaceMask sub = cols[c] ^ (FaceMask{1} << (verts[t] - 1));
            auto it = std::lower_bound(rows.begin(), rows.end(), sub);
            assert(it != rows.end() && *it == sub);
            d(static_cast<std::size_t>(it - rows.begin()), c) += (t % 2 == 0) ? 1 : -1;
        }
    }
    return d;
}

AbelianInvariants homology_from_boundaries(std::size_t cells, const IntMatrix& d_in,
                                           const IntMatrix& d_out) {
    // H = ker(d_out: C_deg -> C_{deg-1}) / im(d_in: C_{deg+1} -> C_deg)
    auto s_in = smith_normal_form(d_in);
    std::size_t rank_out = smith_normal_form(d_out).rank();
    std::vector<Int> torsion;
    for (const Int& v : s_in.divisors)
        if (v > 1) torsion.push_back(v);
    long free_rank = static_cast<long>(cells) - static_cast<long>(rank_out) -
                     static_cast<long>(s_in.rank());
    assert(free_rank >= 0);
    return make_invariants(free_rank, std::move(torsion));
}

}  // namespace

AbelianInvariants reduced_homology(const SimplicialComplex& k, int deg) {
    if (deg < -1 || deg > k.dim()) return {};
    int card = deg + 1;  // cells in degree deg are faces with card vertices
    std::size_t cells = card == 0 ? 1 : k.faces_of_card(card).size();
    IntMatrix d_out = card == 0 ? IntMatrix(0, 1) : simplicial_boundary(k, card);
    IntMatrix d_in = simplicial_boundary(k, card + 1);
    return homology_from_boundaries(cells, d_in, d_out);
}

AbelianInvariants rmk_homology(const SimplicialComplex& k, int deg) {
    if (k.vertex_count() > 16) throw std::invalid_argument("rmk_homology limited to m <= 16");
    if (deg < 0) return {};
    AbelianInvariants total;
    FaceMask g = k.ground();
    FaceMask j = g;
    for (;;) {  // all submasks of the ground set, empty one included
        total = direct_sum(total, reduced_homology(full_subcomplex(k, j), deg - 1));
        if (j == 0) break;
        j = (j - 1) & g;
    }
    return total;
}

namespace {

using Cell = std::pair<FaceMask, FaceMask>;  // (face I, minus-sign mask on complement)

// All dimension-d cells of R_K, sorted for binary-search lookup.
std::vector<Cell> cubical_cells(const SimplicialComplex& k, int d) {
    std::vector<Cell> cells;
    std::vector<FaceMask> faces =
        d == 0 ? std::vector<FaceMask>{0} : k.faces_of_card(d);
    for (FaceMask f : faces) {
        FaceMask comp = k.ground() & ~f;
        FaceMask eps = comp;
        for (;;) {
            cells.emplace_back(f, eps);
            if (eps == 0) break;
            eps = (eps - 1) & comp;
        }
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

// Boundary matrix from dimension-d cells to dimension-(d-1) cells.
IntMatrix cubical_boundary(const std::vector<Cell>& rows, const std::vector<Cell>& cols) {
    IntMatrix d(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        auto [face, eps] = cols[c];
        auto verts = mask_vertices(face);
        for (std::size_t t = 0; t < verts.size(); ++t) {
            FaceMask vb = FaceMask{1} << (verts[t] - 1);
            int sign = (t % 2 == 0) ? 1 : -1;
            for (int side = 0; side < 2; ++side) {
                Cell facet{face ^ vb, side == 0 ? eps : (eps | vb)};
                auto it = std::lower_bound(rows.begin(), rows.end(), facet);
                assert(it != rows.end() && *it == facet);
                d(static_cast<std::size_t>(it - rows.begin()), c) +=
                    side == 0 ? sign : -sign;
            }
        }
    }
    return d;
}

}  // namespace

AbelianInvariants cubical_rmk_homology(const SimplicialComplex& k, int deg) {
    if (k.vertex_count() > 12)
        throw std::invalid_argument("cubical_rmk_homology limited to m <= 12");
    if (deg < 0 || deg > k.dim() + 1) return {};
    auto cells = cubical_cells(k, deg);
    auto below = deg == 0 ? std::vector<Cell>{} : cubical_cells(k, deg - 1);
    auto above = cubical_cells(k, deg + 1);
    IntMatrix d_out = deg == 0 ? IntMatrix(0, cells.size())
                               : cubical_boundary(below, cells);
    IntMatrix d_in = cubical_boundary(cells, above);
    return homology_from_boundaries(cells.size(), d_in, d_out);
}

}  // namespace coxlie
