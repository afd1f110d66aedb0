#include "coxlie/exact.hpp"

#include <random>

#include "doctest.h"

using namespace coxlie;

namespace {

IntMatrix make(std::size_t r, std::size_t c, std::initializer_list<long> vals) {
    IntMatrix m(r, c);
    auto it = vals.begin();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = *it++;
    return m;
}

std::vector<Int> divisors_of(const IntMatrix& m) {
    return smith_normal_form(m).divisors;
}

// Membership test for the row lattice described by a Hermite form: v is in
// the lattice iff reduction by pivot rows terminates at zero.
bool in_row_lattice(const HermiteForm& h, std::vector<Int> v) {
    for (std::size_t i = 0; i < h.pivot_cols.size(); ++i) {
        std::size_t pc = h.pivot_cols[i];
        if (v[pc] % h.mat(i, pc) != 0) return false;
        Int q = v[pc] / h.mat(i, pc);
        for (std::size_t c = 0; c < v.size(); ++c) v[c] -= q * h.mat(i, c);
    }
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("smith normal form: known matrices") {
    CHECK(divisors_of(make(2, 2, {1, 2, 3, 4})) == std::vector<Int>{1, 2});
    CHECK(divisors_of(make(3, 3, {2, 4, 4, -6, 6, 12, 10, -4, -16})) ==
          std::vector<Int>{2, 6, 12});
    CHECK(divisors_of(make(2, 2, {4, 0, 0, 6})) == std::vector<Int>{2, 12});
    CHECK(divisors_of(make(3, 3, {2, 1, 0, 0, 2, 1, 0, 0, 2})) ==
          std::vector<Int>{1, 1, 8});
    CHECK(divisors_of(IntMatrix(3, 4)) == std::vector<Int>{});
    CHECK(divisors_of(IntMatrix(0, 5)) == std::vector<Int>{});
    CHECK(divisors_of(make(1, 1, {-7})) == std::vector<Int>{7});
}

TEST_CASE("smith normal form: transforms multiply back") {
    auto a = make(3, 4, {2, 4, 4, 0, -6, 6, 12, 2, 10, -4, -16, 8});
    auto s = smith_normal_form(a, true);
    IntMatrix prod = s.u * a * s.v;
    for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j) {
            Int expect = (i == j && i < s.divisors.size()) ? s.divisors[i] : Int(0);
            CHECK(prod(i, j) == expect);
        }
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);
}

TEST_CASE("smith normal form: randomized invariants") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = static_cast<std::size_t>(dim(rng));
        std::size_t c = static_cast<std::size_t>(dim(rng));
        IntMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a(i, j) = entry(rng);
        auto s = smith_normal_form(a, true);
        // divisor chain
        for (std::size_t i = 0; i + 1 < s.divisors.size(); ++i) {
            CHECK(s.divisors[i] > 0);
            CHECK(s.divisors[i + 1] % s.divisors[i] == 0);
        }
        // transforms reproduce the diagonal
        IntMatrix prod = s.u * a * s.v;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                Int expect = (i == j && i < s.divisors.size()) ? s.divisors[i] : Int(0);
                CHECK(prod(i, j) == expect);
            }
        // square case: product of divisors = |det|
        if (r == c) {
            Int det = determinant(a);
            Int prod_div = 1;
            for (const Int& d : s.divisors) prod_div *= d;
            CHECK((s.divisors.size() == r ? prod_div : Int(0)) == abs(det));
        }
        // GF(2) rank = number of odd divisors
        GF2Matrix g(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) g.set(i, j, (a(i, j) % 2) != 0);
        std::size_t odd = 0;
        for (const Int& d : s.divisors)
            if (d % 2 != 0) ++odd;
        CHECK(gf2_rank(g) == odd);
    }
}

TEST_CASE("hermite form: known lattice") {
    auto h = hermite_form(make(3, 2, {2, 0, 0, 2, 1, 1}));
    REQUIRE(h.pivot_cols == std::vector<std::size_t>{0, 1});
    CHECK(h.mat(0, 0) == 1);
    CHECK(h.mat(0, 1) == 1);
    CHECK(h.mat(1, 0) == 0);
    CHECK(h.mat(1, 1) == 2);
}

TEST_CASE("hermite form: randomized lattice preservation") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> dim(1, 6), entry(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = static_cast<std::size_t>(dim(rng));
        std::size_t c = static_cast<std::size_t>(dim(rng));
        IntMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a(i, j) = entry(rng);
        auto h = hermite_form(a);
        // echelon shape, positive pivots, reduced above
        for (std::size_t i = 0; i < h.pivot_cols.size(); ++i) {
            CHECK(h.mat(i, h.pivot_cols[i]) > 0);
            for (std::size_t cc = 0; cc < h.pivot_cols[i]; ++cc) CHECK(h.mat(i, cc) == 0);
            for (std::size_t j = i + 1; j < h.pivot_cols.size(); ++j) {
                CHECK(h.mat(i, h.pivot_cols[j]) >= 0);
                CHECK(h.mat(i, h.pivot_cols[j]) < h.mat(j, h.pivot_cols[j]));
            }
        }
        // every original row lies in the lattice spanned by the Hermite rows
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<Int> v(c);
            for (std::size_t j = 0; j < c; ++j) v[j] = a(i, j);
            CHECK(in_row_lattice(h, v));
        }
        // ranks agree with Smith
        CHECK(h.pivot_cols.size() == smith_normal_form(a).divisors.size());
        // same invariant factors
        CHECK(divisors_of(h.mat) == divisors_of(a));
    }
}

TEST_CASE("determinant: known values and cofactor cross-check") {
    CHECK(determinant(make(2, 2, {1, 2, 3, 4})) == -2);
    CHECK(determinant(IntMatrix::identity(5)) == 1);
    CHECK(determinant(make(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1})) == -1);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix a(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a(i, j) = entry(rng);
        Int cof = a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
                  a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
                  a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
        CHECK(determinant(a) == cof);
    }
}

TEST_CASE("gf2: rank, solve, nullspace") {
    GF2Matrix id(4, 4);
    for (std::size_t i = 0; i < 4; ++i) id.set(i, i, true);
    CHECK(gf2_rank(id) == 4);
    CHECK(gf2_nullspace(id).empty());

    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> dim(1, 40), bit(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = static_cast<std::size_t>(dim(rng));
        std::size_t c = static_cast<std::size_t>(dim(rng));
        GF2Matrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a.set(i, j, bit(rng) != 0);
        std::size_t rank = gf2_rank(a);
        auto ns = gf2_nullspace(a);
        CHECK(rank + ns.size() == c);  // rank-nullity
        for (const BitVec& x : ns) {
            for (std::size_t i = 0; i < r; ++i) {
                bool dot = false;
                for (std::size_t j = 0; j < c; ++j) dot ^= a.get(i, j) && x.get(j);
                CHECK_FALSE(dot);
            }
        }
        // b := A * (random x) is always solvable, and the solution verifies
        BitVec x0(c);
        for (std::size_t j = 0; j < c; ++j) x0.set(j, bit(rng) != 0);
        BitVec b(r);
        for (std::size_t i = 0; i < r; ++i) {
            bool dot = false;
            for (std::size_t j = 0; j < c; ++j) dot ^= a.get(i, j) && x0.get(j);
            b.set(i, dot);
        }
        auto sol = gf2_solve(a, b);
        REQUIRE(sol.has_value());
        for (std::size_t i = 0; i < r; ++i) {
            bool dot = false;
            for (std::size_t j = 0; j < c; ++j) dot ^= a.get(i, j) && sol->get(j);
            CHECK(dot == b.get(i));
        }
        // row operations do not change the rank
        GF2Matrix a2 = a;
        for (int k = 0; k < 10 && r >= 2; ++k) {
            std::size_t d = rng() % r, s = rng() % r;
            if (d != s) a2.row(d) ^= a2.row(s);
        }
        CHECK(gf2_rank(a2) == rank);
    }
}

TEST_CASE("gf2: row space accumulator") {
    GF2RowSpace sp(5);
    BitVec v1(5), v2(5), v3(5);
    v1.set(0, true); v1.set(2, true);
    v2.set(2, true); v2.set(4, true);
    v3.set(0, true); v3.set(4, true);  // = v1 + v2
    CHECK(sp.add(v1));
    CHECK(sp.add(v2));
    CHECK_FALSE(sp.add(v3));
    CHECK(sp.rank() == 2);
    CHECK(sp.contains(v3));
    CHECK_FALSE(sp.contains([] { BitVec v(5); v.set(1, true); return v; }()));
    CHECK(sp.contains(BitVec(5)));  // zero vector
}

TEST_CASE("gf2: unsolvable system") {
    GF2Matrix a(2, 2);
    a.set(0, 0, true);
    a.set(1, 0, true);  // rows equal, rhs differs
    BitVec b(2);
    b.set(0, true);
    CHECK_FALSE(gf2_solve(a, b).has_value());
}
