#include "coxlie/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coxlie/cox_word.hpp"
#include "coxlie/free_word.hpp"
#include "coxlie/gscox.hpp"
#include "coxlie/homology.hpp"
#include "coxlie/lie2.hpp"
#include "coxlie/nq.hpp"
#include "coxlie/simplicial_complex.hpp"

namespace coxlie {
namespace {

using Tuples = std::vector<std::vector<int>>;

std::string fmt_dims(const std::vector<long>& d) {
    std::ostringstream os;
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    return os.str();
}

ClaimReport report(const std::string& id, bool passed, std::string witness) {
    return ClaimReport{id, passed, std::move(witness)};
}

SimplicialComplex discrete(int m) { return make_complex(m, {}); }

SimplicialComplex graph(int m, const std::vector<std::vector<int>>& edges) {
    return make_complex(m, edges);
}

// ---------------------------------------------------------------------------
// Layer dimension claims for the small complexes.

ClaimReport dims_claim(const std::string& id, const SimplicialComplex& k,
                       const std::vector<long>& want) {
    const std::vector<long> got = lcs_dims(k, static_cast<int>(want.size()));
    std::string w = "layer dims " + fmt_dims(got);
    if (got != want) w += ", expected " + fmt_dims(want);
    return report(id, got == want, w);
}

// ---------------------------------------------------------------------------
// Degree-4 generator families for the discrete complexes (free products of
// order-2 groups).  Each entry is a left-nested commutator of vertex
// generators; the families below are bases of gamma_4 / gamma_5 for every
// assignment of distinct labels.

Tuples family3(int i, int j, int k) {
    return {{j, i, i, i}, {k, i, i, i}, {k, j, j, i}, {k, i, j, i},
            {k, i, i, j}, {k, j, j, j}, {k, j, i, j}, {k, i, j, k}};
}

Tuples family4(int i, int j, int k, int l) {
    return {// contributions from the rank-3 sub-products
            {k, j, j, i}, {k, i, j, i}, {k, i, i, j}, {k, j, i, j}, {k, i, j, k},
            {j, i, i, i}, {l, j, j, i}, {l, i, j, i}, {l, i, i, j}, {l, j, i, j},
            {l, i, j, l},
            {k, i, i, i}, {l, i, i, i}, {l, k, k, i}, {l, i, k, i}, {l, i, i, k},
            {l, k, i, k}, {l, i, k, l},
            {k, j, j, j}, {l, j, j, j}, {l, k, k, j}, {l, j, k, j}, {l, j, j, k},
            {l, k, k, k}, {l, k, j, k}, {l, j, k, l},
            // commutators meeting all four labels
            {j, l, k, i}, {i, l, k, j}, {i, l, j, k}, {j, l, i, k}, {k, l, i, j},
            {k, l, j, i}};
}

Tuples swap_first_two(Tuples fam) {
    for (auto& t : fam) std::swap(t[0], t[1]);
    return fam;
}

ClaimReport claim_deg3_3_discrete() {
    const Tuples fam = {{1, 2, 1}, {1, 3, 1}, {1, 3, 2}, {2, 3, 1}, {2, 3, 2}};
    const bool ok = verify_basis_claim(discrete(3), 3, fam);
    return report("deg3-3-discrete-basis", ok,
                  "5 nested commutators span gamma_3/gamma_4");
}

ClaimReport claim_deg4_3_discrete_basis() {
    const SimplicialComplex k = discrete(3);
    const Tuples fam = {{1, 2, 1, 1}, {1, 3, 1, 1}, {2, 3, 2, 1}, {1, 3, 2, 1},
                        {1, 3, 1, 2}, {2, 3, 2, 2}, {2, 3, 1, 2}, {1, 3, 2, 3}};
    bool ok = verify_basis_claim(k, 4, fam);
    // Minimality: every proper subfamily and every family with a repeated
    // entry must be rejected.
    for (std::size_t drop = 0; ok && drop < fam.size(); ++drop) {
        Tuples sub = fam;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        ok = ok && !verify_basis_claim(k, 4, sub);
    }
    Tuples dup = fam;
    dup.back() = dup.front();
    ok = ok && !verify_basis_claim(k, 4, dup);
    return report("deg4-3-discrete-basis", ok,
                  "8 nested commutators, all drop-one subfamilies rejected");
}

ClaimReport claim_deg4_3_discrete_families() {
    const SimplicialComplex k = discrete(3);
    std::vector<int> p = {1, 2, 3};
    int checked = 0;
    bool ok = true;
    do {
        ok = ok && verify_basis_claim(k, 4, family3(p[0], p[1], p[2]));
        ++checked;
    } while (ok && std::next_permutation(p.begin(), p.end()));
    return report("deg4-3-discrete-families", ok,
                  std::to_string(checked) + " label assignments checked");
}

ClaimReport claim_deg4_4_discrete_families() {
    const SimplicialComplex k = discrete(4);
    std::vector<int> p = {1, 2, 3, 4};
    int checked = 0;
    bool ok = true;
    do {
        ok = ok && verify_basis_claim(k, 4, family4(p[0], p[1], p[2], p[3]));
        ++checked;
    } while (ok && std::next_permutation(p.begin(), p.end()));
    return report("deg4-4-discrete-families", ok,
                  std::to_string(checked) + " label assignments, 32 commutators each");
}

ClaimReport claim_deg4_swap_first_two() {
    bool ok = verify_basis_claim(discrete(3), 4, swap_first_two(family3(1, 2, 3)));
    ok = ok && verify_basis_claim(discrete(4), 4, swap_first_two(family4(1, 2, 3, 4)));
    return report("deg4-swap-first-two", ok,
                  "families stay bases after swapping the two deepest entries");
}

ClaimReport claim_deg4_triangle() {
    const SimplicialComplex k = graph(3, {{1, 2}, {1, 3}, {2, 3}});
    const std::vector<long> d = lcs_dims(k, 4);
    const bool ok = d == std::vector<long>{3, 0, 0, 0} && verify_basis_claim(k, 4, {});
    return report("deg4-triangle", ok, "layer dims " + fmt_dims(d));
}

ClaimReport claim_deg4_two_edges() {
    // Two edges {i,k} and {j,k} with i < j: gamma_4/gamma_5 is Z/2 generated
    // by (g_i, g_j, g_i, g_i).
    struct Case {
        std::vector<std::vector<int>> edges;
        std::vector<int> gen;
    };
    const std::vector<Case> cases = {{{{1, 3}, {2, 3}}, {1, 2, 1, 1}},
                                     {{{1, 2}, {2, 3}}, {1, 3, 1, 1}},
                                     {{{1, 2}, {1, 3}}, {2, 3, 2, 2}}};
    bool ok = true;
    for (const Case& c : cases)
        ok = ok && verify_basis_claim(graph(3, c.edges), 4, {c.gen});
    return report("deg4-two-edges", ok,
                  "3 path complexes, one generator each");
}

ClaimReport claim_deg4_one_edge() {
    // One edge {i,j} with i < j and isolated vertex k: gamma_4/gamma_5 is
    // (Z/2)^4 with the stated nested commutators.
    struct Case {
        std::vector<int> edge;  // {i, j}
        int k;
    };
    const std::vector<Case> cases = {{{1, 2}, 3}, {{1, 3}, 2}, {{2, 3}, 1}};
    bool ok = true;
    for (const Case& c : cases) {
        const int i = c.edge[0], j = c.edge[1], k = c.k;
        const Tuples fam = {
            {i, k, i, i}, {k, j, k, k}, {k, j, k, i}, {k, j, i, k}};
        ok = ok && verify_basis_claim(graph(3, {c.edge}), 4, fam);
    }
    return report("deg4-one-edge", ok, "3 one-edge complexes, 4 generators each");
}

// ---------------------------------------------------------------------------
// Word identities.

ClaimReport claim_square_identity() {
    long checked = 0;
    bool ok = true;
    for (int m = 2; m <= 4 && ok; ++m)
        for (const SimplicialComplex& k : all_complexes(m)) {
            for (int i = 1; i <= m && ok; ++i)
                for (int j = i + 1; j <= m && ok; ++j) {
                    ok = verify_square_identity(k, i, j) &&
                         verify_degree4_expansion(k, i, j);
                    ++checked;
                }
            if (!ok) break;
        }
    return report("racg-square-identity", ok,
                  std::to_string(checked) + " generator pairs across all complexes on <= 4 vertices");
}

ClaimReport claim_hall_witt() {
    std::mt19937_64 rng(0x5eed0001ULL);
    bool ok = true;
    int trials = 0;
    for (; trials < 100 && ok; ++trials) {
        const FreeWord a = random_word(rng, 4, 6);
        const FreeWord b = random_word(rng, 4, 6);
        const FreeWord c = random_word(rng, 4, 6);
        ok = verify_hall_witt(a, b, c) && verify_triple_lemma(a, b, c);
    }
    return report("free-hall-witt", ok,
                  std::to_string(trials) + " random triples in F_4");
}

// ---------------------------------------------------------------------------
// Congruences modulo terms of the lower central series of a free group.
// Each instance is a triple (a, b, c) of free words of known weights; the
// stated congruences hold modulo the indicated gamma term.

struct CongruenceInstance {
    FreeWord a, b, c;
    int wa, wb, wc;
};

std::vector<CongruenceInstance> congruence_instances() {
    const FreeWord g1 = FreeWord::generator(1);
    const FreeWord g2 = FreeWord::generator(2);
    const FreeWord g3 = FreeWord::generator(3);
    const FreeWord g4 = FreeWord::generator(4);
    std::vector<CongruenceInstance> out;
    out.push_back({g1, g2, g3, 1, 1, 1});
    out.push_back({commutator(g1, g2), g3, g4, 2, 1, 1});
    out.push_back({g2, commutator(g1, g3), g1, 1, 2, 1});
    return out;
}

ClaimReport claim_congruence_reversal() {
    bool ok = true;
    for (const CongruenceInstance& t : congruence_instances()) {
        const int c = t.wa + t.wb + t.wc + 1;
        const FreeWord lhs = commutator(commutator(t.a, t.b), t.c).inverse();
        const FreeWord rhs = commutator(commutator(t.b, t.a), t.c);
        ok = ok && verify_congruence(lhs, rhs, c);
    }
    return report("congruence-reversal", ok,
                  "((a,b),c)^-1 = ((b,a),c) mod gamma_{wt+1}, 3 weight profiles");
}

ClaimReport claim_congruence_rotation() {
    bool ok = true;
    for (const CongruenceInstance& t : congruence_instances()) {
        const int c = t.wa + t.wb + t.wc + 1;
        const FreeWord lhs = commutator(commutator(t.a, t.b), t.c);
        const FreeWord rhs = commutator(t.c, commutator(t.b, t.a));
        ok = ok && verify_congruence(lhs, rhs, c);
    }
    return report("congruence-rotation", ok,
                  "((a,b),c) = (c,(b,a)) mod gamma_{wt+1}, 3 weight profiles");
}

ClaimReport claim_congruence_expansion() {
    bool ok = true;
    for (const CongruenceInstance& t : congruence_instances()) {
        const int i = t.wa, j = t.wb, k = t.wc;
        const int c = std::min({2 * i + j + k, i + 2 * j + k, i + j + 2 * k});
        const FreeWord lhs1 = commutator(t.a, commutator(t.b, t.c));
        const FreeWord rhs1 = commutator(t.c, commutator(t.b, t.a)) *
                              commutator(t.b, commutator(t.a, t.c));
        const FreeWord lhs2 = commutator(commutator(t.a, t.b), t.c);
        const FreeWord rhs2 = commutator(commutator(t.c, t.b), t.a) *
                              commutator(commutator(t.a, t.c), t.b);
        ok = ok && verify_congruence(lhs1, rhs1, c) && verify_congruence(lhs2, rhs2, c);
    }
    return report("congruence-expansion", ok,
                  "two-term expansions of triple commutators, 3 weight profiles");
}

// ---------------------------------------------------------------------------
// Combinatorial description of the layers in degrees <= 3, cross-checked
// against the generating patterns of the moment-angle complex.

SimplicialComplex seeded_random_complex(std::mt19937_64& rng, int m) {
    std::uniform_int_distribution<int> nfaces(0, 2 * m);
    std::uniform_int_distribution<int> card(2, std::min(4, m));
    std::uniform_int_distribution<int> vert(1, m);
    std::vector<std::vector<int>> faces;
    const int n = nfaces(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<int> f;
        const int c = card(rng);
        while (static_cast<int>(f.size()) < c) {
            const int v = vert(rng);
            bool fresh = true;
            for (int u : f) fresh = fresh && u != v;
            if (fresh) f.push_back(v);
        }
        faces.push_back(std::move(f));
    }
    return make_complex(m, faces);
}

bool low_degree_dims_match(const SimplicialComplex& k) {
    const std::vector<long> d = lcs_dims(k, 3);
    long p2 = 0, p3 = 0;
    for (const CommutatorPattern& p : gscox_generators(k)) {
        if (p.length() == 2) ++p2;
        if (p.length() == 3) ++p3;
    }
    return d[0] == k.m() && d[1] == p2 && d[2] == p2 + p3;
}

bool low_degree_basis_matches(const SimplicialComplex& k) {
    // Degree 3 basis: (i, j, j) for every non-edge i < j together with the
    // combinatorial patterns (i, j, k).
    Tuples fam;
    for (const CommutatorPattern& p : gscox_generators(k)) {
        if (p.length() == 2) fam.push_back({p.i, p.j, p.j});
        if (p.length() == 3) fam.push_back(p.as_tuple());
    }
    return verify_basis_claim(k, 3, fam);
}

ClaimReport claim_combinatorial_low_degrees() {
    bool ok = true;
    long checked = 0;
    for (int m = 2; m <= 4 && ok; ++m)
        for (const SimplicialComplex& k : all_complexes(m)) {
            ok = low_degree_dims_match(k) && low_degree_basis_matches(k);
            ++checked;
            if (!ok) break;
        }
    std::mt19937_64 rng(0x5eed0002ULL);
    for (int t = 0; t < 20 && ok; ++t) {
        const SimplicialComplex k = seeded_random_complex(rng, 5);
        ok = low_degree_dims_match(k) && low_degree_basis_matches(k);
        ++checked;
    }
    return report("combinatorial-low-degrees", ok,
                  std::to_string(checked) +
                      " complexes: degree <= 3 layers match the pattern counts");
}

// ---------------------------------------------------------------------------
// First homology of the real moment-angle complex.

ClaimReport claim_homology_h1() {
    bool ok = true;
    long checked = 0;
    for (int m = 2; m <= 4 && ok; ++m)
        for (const SimplicialComplex& k : all_complexes(m)) {
            const AbelianInvariants h = rmk_homology(k, 1);
            const long rank = static_cast<long>(gscox_generators(k).size());
            ok = h.torsion.empty() && h.free_rank == rank &&
                 h == cubical_rmk_homology(k, 1);
            ++checked;
            if (!ok) break;
        }
    ok = ok && rmk_homology(discrete(3), 1).free_rank == 5 &&
         rmk_homology(discrete(4), 1).free_rank == 17;
    return report("homology-h1", ok,
                  std::to_string(checked) +
                      " complexes: H_1 free of rank = pattern count, "
                      "cell and splitting computations agree");
}

// ---------------------------------------------------------------------------
// The quadratic-plus-cubic presented Lie algebra versus the group layers.

ClaimReport claim_lie_witt() {
    bool ok = true;
    for (int m = 1; m <= 4 && ok; ++m) {
        const std::vector<long> free_dims = quotient_dims(m, {}, {}, 5);
        for (int d = 1; d <= 5 && ok; ++d)
            ok = free_dims[static_cast<std::size_t>(d - 1)] == witt_number(m, d);
    }
    return report("lie-witt", ok,
                  "relation-free quotients reproduce the necklace dimensions");
}

ClaimReport claim_lie_low_degrees() {
    bool ok = true;
    long checked = 0;
    for (int m = 2; m <= 4 && ok; ++m)
        for (const SimplicialComplex& k : all_complexes(m)) {
            const LieGroupComparison cmp = compare_with_group(k, 3);
            for (long kd : cmp.kernel_dims) ok = ok && kd == 0;
            ++checked;
            if (!ok) break;
        }
    return report("lie-low-degrees", ok,
                  std::to_string(checked) +
                      " complexes: algebra and group layers agree in degrees <= 3");
}

ClaimReport claim_lie_deg4_relation() {
    bool ok = true;
    for (int m = 3; m <= 4 && ok; ++m) {
        const std::vector<Lie2Element> cubes = square_relations(m);
        for (int i = 1; i <= m && ok; ++i)
            for (int j = 1; j <= m && ok; ++j) {
                if (i == j) continue;
                const Lie2Element lhs = lie2_nested(m, {i, j, i, i});
                const Lie2Element rhs = lie2_nested(m, {i, j, i, j});
                ok = check_derived_relation(m, {}, cubes, lhs, rhs) &&
                     !check_derived_relation(m, {}, {}, lhs, rhs);
            }
    }
    return report("lie-deg4-relation", ok,
                  "(i,j,i,i) = (i,j,i,j) follows from the cubic relations, "
                  "not in the free algebra");
}

ClaimReport claim_lie_surjection() {
    bool ok = true;
    long checked = 0;
    for (int m = 3; m <= 4 && ok; ++m)
        for (const SimplicialComplex& k : all_complexes(m)) {
            const LieGroupComparison cmp = compare_with_group(k, 4);
            for (long kd : cmp.kernel_dims) ok = ok && kd >= 0;
            ++checked;
            if (!ok) break;
        }
    return report("lie-surjection", ok,
                  std::to_string(checked) +
                      " complexes: algebra dims dominate group dims in degrees <= 4");
}

// ---------------------------------------------------------------------------
// Registry.

struct Entry {
    const char* id;
    ClaimReport (*run)();
};

ClaimReport claim_dims_3_discrete() {
    return dims_claim("dims-3-discrete", discrete(3), {3, 3, 5, 8});
}
ClaimReport claim_dims_3_one_edge() {
    return dims_claim("dims-3-one-edge", graph(3, {{1, 3}}), {3, 2, 3, 4});
}
ClaimReport claim_dims_3_path() {
    return dims_claim("dims-3-path", graph(3, {{1, 3}, {2, 3}}), {3, 1, 1, 1});
}
ClaimReport claim_dims_3_triangle() {
    return dims_claim("dims-3-triangle", graph(3, {{1, 2}, {1, 3}, {2, 3}}),
                      {3, 0, 0, 0});
}
ClaimReport claim_dims_4_discrete() {
    return dims_claim("dims-4-discrete", discrete(4), {4, 6, 14, 32});
}

constexpr Entry kRegistry[] = {
    {"dims-3-discrete", claim_dims_3_discrete},
    {"dims-3-one-edge", claim_dims_3_one_edge},
    {"dims-3-path", claim_dims_3_path},
    {"dims-3-triangle", claim_dims_3_triangle},
    {"dims-4-discrete", claim_dims_4_discrete},
    {"deg3-3-discrete-basis", claim_deg3_3_discrete},
    {"deg4-3-discrete-basis", claim_deg4_3_discrete_basis},
    {"deg4-3-discrete-families", claim_deg4_3_discrete_families},
    {"deg4-4-discrete-families", claim_deg4_4_discrete_families},
    {"deg4-swap-first-two", claim_deg4_swap_first_two},
    {"deg4-triangle", claim_deg4_triangle},
    {"deg4-two-edges", claim_deg4_two_edges},
    {"deg4-one-edge", claim_deg4_one_edge},
    {"racg-square-identity", claim_square_identity},
    {"free-hall-witt", claim_hall_witt},
    {"congruence-reversal", claim_congruence_reversal},
    {"congruence-rotation", claim_congruence_rotation},
    {"congruence-expansion", claim_congruence_expansion},
    {"combinatorial-low-degrees", claim_combinatorial_low_degrees},
    {"homology-h1", claim_homology_h1},
    {"lie-witt", claim_lie_witt},
    {"lie-low-degrees", claim_lie_low_degrees},
    {"lie-deg4-relation", claim_lie_deg4_relation},
    {"lie-surjection", claim_lie_surjection},
};

}  // namespace

std::vector<std::string> claim_ids() {
    std::vector<std::string> out;
    for (const Entry& e : kRegistry) out.emplace_back(e.id);
    return out;
}

std::vector<ClaimReport> run_all(const std::string& scope) {
    std::vector<ClaimReport> out;
    for (const Entry& e : kRegistry) {
        const std::string id = e.id;
        if (id.compare(0, scope.size(), scope) != 0) continue;
        try {
            out.push_back(e.run());
        } catch (const std::exception& ex) {
            out.push_back(report(id, false, std::string("exception: ") + ex.what()));
        }
    }
    return out;
}

bool symmetry_check(const SimplicialComplex& k, int degree,
                    const std::vector<std::vector<int>>& family,
                    const std::vector<int>& permutation) {
    const int m = k.m();
    if (static_cast<int>(permutation.size()) != m)
        throw std::invalid_argument("permutation length must equal the vertex count");
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (int v : permutation) {
        if (v < 1 || v > m || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("not a permutation of the vertex set");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    // The permutation must map faces to faces.
    for (FaceMask f : k.faces()) {
        FaceMask img = 0;
        for (int v = 1; v <= m; ++v)
            if (f & (FaceMask{1} << (v - 1)))
                img |= FaceMask{1} << (permutation[static_cast<std::size_t>(v - 1)] - 1);
        if (!k.has_face(img))
            throw std::invalid_argument("permutation does not preserve the complex");
    }
    Tuples image = family;
    for (auto& tuple : image)
        for (int& v : tuple) {
            if (v < 1 || v > m)
                throw std::invalid_argument("commutator entry out of range");
            v = permutation[static_cast<std::size_t>(v - 1)];
        }
    return verify_basis_claim(k, degree, image);
}

}  // namespace coxlie
