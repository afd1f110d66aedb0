#include <algorithm>
#include <random>
#include <vector>

#include "coxlie/lie2.hpp"
#include "coxlie/nq.hpp"
#include "coxlie/simplicial_complex.hpp"
#include "doctest.h"

using namespace coxlie;

namespace {

bool is_lyndon(const std::vector<int>& w) {
    for (std::size_t s = 1; s < w.size(); ++s) {
        std::vector<int> rot(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s));
        if (!std::lexicographical_compare(w.begin(), w.end(), rot.begin(), rot.end()))
            return false;
    }
    return true;
}

Lie2Element random_homogeneous(int m, int d, std::mt19937& rng) {
    std::uniform_int_distribution<int> letter(1, m);
    std::uniform_int_distribution<int> count(1, 3);
    std::vector<int> word(static_cast<std::size_t>(d));
    Lie2Element acc = [&] {
        for (auto& l : word) l = letter(rng);
        return lie2_nested(m, word);
    }();
    for (int t = count(rng); t > 0; --t) {
        for (auto& l : word) l = letter(rng);
        acc = lie2_sum(acc, lie2_nested(m, word));
    }
    return acc;
}

}  // namespace

TEST_CASE("lyndon words are enumerated in order with witt counts") {
    const std::vector<long> witt2 = {2, 1, 2, 3, 6};
    const std::vector<long> witt3 = {3, 3, 8, 18, 48};
    const std::vector<long> witt4 = {4, 6, 20, 60, 204};
    for (int d = 1; d <= 5; ++d) {
        CHECK(witt_number(2, d) == witt2[static_cast<std::size_t>(d - 1)]);
        CHECK(witt_number(3, d) == witt3[static_cast<std::size_t>(d - 1)]);
        CHECK(witt_number(4, d) == witt4[static_cast<std::size_t>(d - 1)]);
        CHECK(witt_number(1, d) == (d == 1 ? 1 : 0));
    }

    for (int m = 1; m <= 4; ++m)
        for (int d = 1; d <= 5; ++d) {
            const auto words = lyndon_words(m, d);
            CHECK(static_cast<long>(words.size()) == witt_number(m, d));
            CHECK(std::is_sorted(words.begin(), words.end()));
            for (const auto& w : words) {
                CHECK(static_cast<int>(w.size()) == d);
                CHECK(is_lyndon(w));
            }
        }

    CHECK(lyndon_words(3, 1) ==
          std::vector<std::vector<int>>{{1}, {2}, {3}});
    CHECK(lyndon_words(2, 3) ==
          std::vector<std::vector<int>>{{1, 1, 2}, {1, 2, 2}});
}

TEST_CASE("standard bracketings of lyndon words form a free basis") {
    for (int m = 2; m <= 4; ++m)
        for (int d = 1; d <= 5; ++d) {
            const auto basis = free_lie_basis(m, d);
            REQUIRE(static_cast<long>(basis.size()) == witt_number(m, d));
            GF2RowSpace space(basis.empty() ? 1 : basis[0].coords.size());
            for (const auto& b : basis) CHECK(space.add(b.coords));
            CHECK(static_cast<long>(space.rank()) == witt_number(m, d));
        }

    // Triangularity: the bracketing of a Lyndon word contains the word
    // itself as a monomial.
    const auto words = lyndon_words(3, 4);
    const auto basis = free_lie_basis(3, 4);
    for (std::size_t t = 0; t < words.size(); ++t) {
        std::size_t idx = 0;
        for (const int l : words[t]) idx = idx * 3 + static_cast<std::size_t>(l - 1);
        CHECK(basis[t].coords.get(idx));
    }
}

TEST_CASE("bracket is alternating, bilinear, and satisfies jacobi") {
    std::mt19937 rng(2026);
    const int m = 3;
    for (int trial = 0; trial < 30; ++trial) {
        const int da = 1 + trial % 2, db = 1 + (trial / 2) % 2;
        const Lie2Element a = random_homogeneous(m, da, rng);
        const Lie2Element b = random_homogeneous(m, db, rng);
        const Lie2Element c = random_homogeneous(m, 1, rng);

        CHECK(lie2_bracket(a, a).is_zero());
        CHECK(lie2_bracket(a, b) == lie2_bracket(b, a));  // char 2

        const Lie2Element a2 = random_homogeneous(m, da, rng);
        CHECK(lie2_bracket(lie2_sum(a, a2), b) ==
              lie2_sum(lie2_bracket(a, b), lie2_bracket(a2, b)));

        const Lie2Element jacobi = lie2_sum(
            lie2_sum(lie2_bracket(lie2_bracket(a, b), c),
                     lie2_bracket(lie2_bracket(b, c), a)),
            lie2_bracket(lie2_bracket(c, a), b));
        CHECK(jacobi.is_zero());
    }

    // Explicit bilinearity on fixed elements.
    const Lie2Element x = lie2_generator(3, 1);
    const Lie2Element y = lie2_generator(3, 2);
    const Lie2Element z = lie2_generator(3, 3);
    CHECK(lie2_bracket(lie2_sum(x, y), z) ==
          lie2_sum(lie2_bracket(x, z), lie2_bracket(y, z)));

    // [mu1, mu2] expands to the two words 12 and 21.
    const Lie2Element xy = lie2_bracket(x, y);
    CHECK(xy.coords.popcount() == 2);
    CHECK(xy.coords.get(0 * 3 + 1));
    CHECK(xy.coords.get(1 * 3 + 0));
}

TEST_CASE("quotient dims reproduce witt numbers and the graph cases") {
    for (int m = 2; m <= 4; ++m) {
        const auto dims = quotient_dims(m, {}, {}, 5);
        for (int d = 1; d <= 5; ++d)
            CHECK(dims[static_cast<std::size_t>(d - 1)] == witt_number(m, d));
    }

    // Complete graph: abelian.
    CHECK(quotient_dims(3, {{1, 2}, {1, 3}, {2, 3}}, {}, 3) ==
          std::vector<long>{3, 0, 0});
    CHECK(quotient_dims(3, {{1, 2}, {1, 3}, {2, 3}}, square_relations(3), 5) ==
          std::vector<long>{3, 0, 0, 0, 0});

    // The cubic relations cut degree 3 down to the group dimensions; the
    // degree-4/5 values are regression pins of the ideal recurrence.
    CHECK(quotient_dims(3, {}, square_relations(3), 5) ==
          std::vector<long>{3, 3, 5, 9, 21});
    CHECK(quotient_dims(4, {}, square_relations(4), 5) ==
          std::vector<long>{4, 6, 14, 36, 108});
    CHECK(quotient_dims(5, {}, square_relations(5), 3) ==
          std::vector<long>{5, 10, 30});

    // Monotonicity: extra relations never increase any dimension.
    const auto complexes = std::vector<std::vector<std::pair<int, int>>>{
        {}, {{1, 2}}, {{1, 2}, {2, 3}}, {{1, 3}, {2, 3}}};
    for (const auto& edges : complexes) {
        const auto plain = quotient_dims(4, edges, {}, 4);
        const auto cut = quotient_dims(4, edges, square_relations(4), 4);
        for (std::size_t t = 0; t < plain.size(); ++t) CHECK(cut[t] <= plain[t]);
    }
}

TEST_CASE("derived relations of degree four hold in the quotient") {
    for (int m = 3; m <= 4; ++m)
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
                if (i == j) continue;
                const Lie2Element lhs = lie2_nested(m, {i, j, i, i});
                const Lie2Element rhs = lie2_nested(m, {i, j, i, j});
                CHECK(check_derived_relation(m, {}, square_relations(m), lhs, rhs));
                // In the free algebra the two sides differ.
                CHECK_FALSE(check_derived_relation(m, {}, {}, lhs, rhs));
                CHECK(check_derived_relation(m, {}, {}, lhs, lhs));
            }

    // Degree mismatch is rejected.
    CHECK_THROWS_AS(check_derived_relation(3, {}, {}, lie2_generator(3, 1),
                                           lie2_nested(3, {1, 2})),
                    std::invalid_argument);
}

TEST_CASE("lie quotient matches the group engine in low degrees") {
    const SimplicialComplex discrete3 = make_complex(3, {});
    const auto cmp3 = compare_with_group(discrete3, 4);
    CHECK(cmp3.group_dims == std::vector<long>{3, 3, 5, 8});
    CHECK(cmp3.lie_dims == std::vector<long>{3, 3, 5, 9});
    CHECK(cmp3.kernel_dims == std::vector<long>{0, 0, 0, 1});

    // For these graphs the surjection is even an isomorphism through
    // degree 4 (observed cross-check of the two pipelines).
    for (const auto& edges : std::vector<std::vector<std::pair<int, int>>>{
             {{1, 3}}, {{1, 3}, {2, 3}}}) {
        const auto cmp = compare_with_group(flag_complex_of_graph(3, edges), 4);
        CHECK(cmp.kernel_dims == std::vector<long>{0, 0, 0, 0});
    }

    const SimplicialComplex discrete4 = make_complex(4, {});
    const auto cmp4 = compare_with_group(discrete4, 3);
    CHECK(cmp4.lie_dims == std::vector<long>{4, 6, 14});
    CHECK(cmp4.group_dims == std::vector<long>{4, 6, 14});

    const SimplicialComplex full3 = flag_complex_of_graph(3, {{1, 2}, {1, 3}, {2, 3}});
    const auto cmpf = compare_with_group(full3, 4);
    CHECK(cmpf.lie_dims == std::vector<long>{3, 0, 0, 0});
    CHECK(cmpf.group_dims == std::vector<long>{3, 0, 0, 0});

    // The surjection never inverts: lie dims dominate everywhere.
    const auto graphs = std::vector<std::vector<std::pair<int, int>>>{
        {{1, 2}}, {{1, 3}, {2, 3}}, {{1, 2}, {3, 4}}, {{1, 2}, {2, 3}, {3, 4}}};
    for (const auto& edges : graphs) {
        const SimplicialComplex k = flag_complex_of_graph(4, edges);
        const auto cmp = compare_with_group(k, 4);
        for (const long kd : cmp.kernel_dims) CHECK(kd >= 0);
    }
}

TEST_CASE("lie2 argument validation") {
    CHECK_THROWS_AS(lie2_generator(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(lie2_generator(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(lie2_generator(9, 1), std::invalid_argument);
    CHECK_THROWS_AS(lyndon_words(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(quotient_dims(3, {}, {}, 6), std::invalid_argument);
    CHECK_THROWS_AS(quotient_dims(3, {}, {}, 0), std::invalid_argument);
    CHECK_THROWS_AS(lie2_nested(3, {}), std::invalid_argument);
    CHECK_THROWS_AS(lie2_sum(lie2_generator(3, 1), lie2_nested(3, {1, 2})),
                    std::invalid_argument);
    CHECK_THROWS_AS(lie2_bracket(lie2_generator(3, 1), lie2_generator(4, 1)),
                    std::invalid_argument);
}
