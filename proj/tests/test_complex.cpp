#include <random>

#include "coxlie/gscox.hpp"
#include "coxlie/homology.hpp"
#include "coxlie/simplicial_complex.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace coxlie;
using coxlie::testutil::inv;
using coxlie::testutil::random_complex;

namespace {

SimplicialComplex path3() { return make_complex(3, {{1, 2}, {2, 3}}); }

SimplicialComplex cycle(int m) {
    std::vector<std::vector<int>> faces;
    for (int v = 1; v <= m; ++v) faces.push_back({v, v % m + 1});
    return make_complex(m, faces);
}

SimplicialComplex rp2_six() {
    return make_complex(6, {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
                            {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}});
}

}  // namespace

TEST_CASE("complex construction: closure, ground set, labels") {
    auto k = make_complex(4, {{1, 2}, {2, 3}});
    CHECK(k.m() == 4);
    CHECK(k.vertex_count() == 4);  // isolated vertex 4 is still a vertex
    CHECK(k.dim() == 1);
    CHECK(k.has_face(vertex_mask({1, 2})));
    CHECK(k.has_face(vertex_mask({4})));
    CHECK_FALSE(k.has_face(vertex_mask({1, 3})));
    CHECK(k.faces().size() == 4 + 2);

    auto tri = make_complex(3, {{1, 2, 3}});
    CHECK(tri.dim() == 2);
    CHECK(tri.faces().size() == 7);  // closure fills in edges and vertices
    CHECK(tri.has_face(vertex_mask({1, 3})));

    CHECK_THROWS_AS(make_complex(2, {{1, 3}}), std::invalid_argument);
}

TEST_CASE("flag complexes") {
    auto k3 = flag_complex_of_graph(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(k3.has_face(vertex_mask({1, 2, 3})));
    CHECK(is_flag(k3));

    auto c4 = flag_complex_of_graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK(c4.dim() == 1);  // no triangles in a 4-cycle
    CHECK(is_flag(c4));
    CHECK(c4 == cycle(4));

    // boundary of the triangle is not flag: all three edges but no 2-face
    auto hollow = make_complex(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(is_flag(hollow));
}

TEST_CASE("full subcomplex keeps labels") {
    auto sub = full_subcomplex(path3(), vertex_mask({1, 3}));
    CHECK(sub.vertex_count() == 2);
    CHECK(sub.has_face(vertex_mask({3})));
    CHECK_FALSE(sub.has_face(vertex_mask({1, 3})));
    CHECK(sub.dim() == 0);

    auto empty = full_subcomplex(path3(), 0);
    CHECK(empty.is_empty());
    CHECK(empty.dim() == -1);
}

TEST_CASE("connected components") {
    auto comps = connected_components(make_complex(5, {{1, 4}, {2, 3}}));
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == vertex_mask({1, 4}));
    CHECK(comps[1] == vertex_mask({2, 3}));
    CHECK(comps[2] == vertex_mask({5}));

    CHECK(connected_components(full_subcomplex(path3(), 0)).empty());
    CHECK(connected_components(path3()).size() == 1);
}

TEST_CASE("reduced homology: spheres, points, projective plane") {
    // no vertices at all: only the empty face survives
    CHECK(reduced_homology(SimplicialComplex(), -1) == inv(1));
    // contractible things vanish in all degrees
    for (int d = -1; d <= 2; ++d) {
        CHECK(reduced_homology(make_complex(1, {}), d) == inv(0));
        CHECK(reduced_homology(make_complex(3, {{1, 2, 3}}), d) == inv(0));
    }
    // two points
    CHECK(reduced_homology(make_complex(2, {}), 0) == inv(1));
    CHECK(reduced_homology(make_complex(2, {}), -1) == inv(0));
    // circle as the hollow triangle
    auto s1 = make_complex(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(reduced_homology(s1, 0) == inv(0));
    CHECK(reduced_homology(s1, 1) == inv(1));
    // 2-sphere as the hollow tetrahedron
    auto s2 = make_complex(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    CHECK(reduced_homology(s2, 1) == inv(0));
    CHECK(reduced_homology(s2, 2) == inv(1));
    // projective plane: 2-torsion in degree 1
    CHECK(reduced_homology(rp2_six(), 0) == inv(0));
    CHECK(reduced_homology(rp2_six(), 1) == inv(0, {2}));
    CHECK(reduced_homology(rp2_six(), 2) == inv(0));
    // out-of-range degrees
    CHECK(reduced_homology(s1, 5) == inv(0));
    CHECK(reduced_homology(s1, -2) == inv(0));
}

TEST_CASE("reduced homology: random complexes satisfy Euler characteristic") {
    std::mt19937_64 rng(314);
    for (int trial = 0; trial < 60; ++trial) {
        int m = 2 + static_cast<int>(rng() % 4);  // 2..5
        auto k = random_complex(rng, m);
        long chi_cells = -1;  // empty face
        for (int card = 1; card <= m; ++card)
            chi_cells += (card % 2 ? 1 : -1) * static_cast<long>(k.faces_of_card(card).size());
        long chi_hom = 0;
        for (int d = -1; d <= k.dim(); ++d)
            chi_hom += (d % 2 == 0 ? 1 : -1) * reduced_homology(k, d).free_rank;
        CHECK(chi_cells == chi_hom);  // reduced Euler characteristic agreement
        // degree 0: free of rank (#components - 1), never torsion
        auto h0 = reduced_homology(k, 0);
        CHECK(h0.torsion.empty());
        CHECK(h0.free_rank == static_cast<long>(connected_components(k).size()) - 1);
    }
}

TEST_CASE("moment-angle homology via splitting formula: known spaces") {
    // two isolated vertices: R_K is a circle
    auto two = make_complex(2, {});
    CHECK(rmk_homology(two, 0) == inv(1));
    CHECK(rmk_homology(two, 1) == inv(1));
    CHECK(rmk_homology(two, 2) == inv(0));
    // three isolated vertices
    auto three = make_complex(3, {});
    CHECK(rmk_homology(three, 1) == inv(5));
    CHECK(rmk_homology(three, 2) == inv(0));
    // full simplex: a cube, contractible
    auto simplex = make_complex(3, {{1, 2, 3}});
    CHECK(rmk_homology(simplex, 0) == inv(1));
    CHECK(rmk_homology(simplex, 1) == inv(0));
    CHECK(rmk_homology(simplex, 2) == inv(0));
    // 4-cycle: the torus
    CHECK(rmk_homology(cycle(4), 0) == inv(1));
    CHECK(rmk_homology(cycle(4), 1) == inv(2));
    CHECK(rmk_homology(cycle(4), 2) == inv(1));
    // 5-cycle: orientable surface of genus 5
    CHECK(rmk_homology(cycle(5), 1) == inv(10));
    CHECK(rmk_homology(cycle(5), 2) == inv(1));
    CHECK(rmk_homology(cycle(5), 3) == inv(0));
}

TEST_CASE("cubical cell model agrees with the splitting formula") {
    std::vector<SimplicialComplex> family = {
        SimplicialComplex{}, make_complex(1, {}), make_complex(2, {}),
        make_complex(2, {{1, 2}}), make_complex(3, {}), make_complex(4, {}),
        path3(), cycle(4), cycle(5), make_complex(3, {{1, 2, 3}}),
        make_complex(4, {{1, 2, 3}, {3, 4}}),
        make_complex(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}})};
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 30; ++trial)
        family.push_back(random_complex(rng, 2 + static_cast<int>(rng() % 4)));
    for (const auto& k : family)
        for (int deg = 0; deg <= k.vertex_count(); ++deg) {
            auto a = rmk_homology(k, deg);
            auto b = cubical_rmk_homology(k, deg);
            CAPTURE(k.m());
            CAPTURE(deg);
            CHECK(a == b);
        }
}

TEST_CASE("gscox patterns: worked example on three isolated vertices") {
    auto pats = gscox_generators(make_complex(3, {}));
    REQUIRE(pats.size() == 5);
    CHECK(pats[0].as_tuple() == std::vector<int>{1, 2});
    CHECK(pats[1].as_tuple() == std::vector<int>{1, 3});
    CHECK(pats[2].as_tuple() == std::vector<int>{2, 3});
    CHECK(pats[3].as_tuple() == std::vector<int>{1, 3, 2});
    CHECK(pats[4].as_tuple() == std::vector<int>{2, 3, 1});
}

TEST_CASE("gscox patterns: shapes and counts") {
    CHECK(gscox_generators(make_complex(4, {})).size() == 17);
    auto path = gscox_generators(path3());
    REQUIRE(path.size() == 1);
    CHECK(path[0].as_tuple() == std::vector<int>{1, 3});
    // simplices have connected subcomplexes everywhere: no patterns
    CHECK(gscox_generators(make_complex(3, {{1, 2, 3}})).empty());
    // pattern shape constraints hold on random complexes
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        auto k = random_complex(rng, 2 + static_cast<int>(rng() % 4));
        auto pats = gscox_generators(k);
        for (const auto& p : pats) {
            CHECK(p.i < p.j);
            for (std::size_t t = 0; t < p.ks.size(); ++t) {
                CHECK(p.ks[t] < p.j);
                CHECK(p.ks[t] != p.i);
                if (t + 1 < p.ks.size()) CHECK(p.ks[t] > p.ks[t + 1]);
            }
        }
        // the count is the first moment-angle Betti number
        auto h1 = rmk_homology(k, 1);
        CHECK(h1.torsion.empty());
        CHECK(static_cast<long>(pats.size()) == h1.free_rank);
    }
}
