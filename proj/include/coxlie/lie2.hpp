#pragma once

// Graded Lie algebras over GF(2) presented by generators and homogeneous
// relations: the free Lie algebra on m degree-1 generators mu_1..mu_m via
// the Lyndon basis, and quotients by graph (edge) relations and the cubic
// relations [mu_i, mu_j, mu_j] = [mu_i, mu_j, mu_i].
//
// A homogeneous element of degree d is stored by its expansion in the
// degree-d slice of the tensor algebra: bit w is set iff the length-d word
// with base-m digits of w (most significant digit first, digit = letter-1)
// appears with coefficient 1.  Brackets are computed exactly via
// [x, y] = xy + yx, so alternation and Jacobi need no side conditions.

#include <cstddef>
#include <utility>
#include <vector>

#include "coxlie/exact.hpp"
#include "coxlie/simplicial_complex.hpp"

namespace coxlie {

struct Lie2Element {
    int m = 0;       // alphabet size
    int degree = 0;  // word length; coords has m^degree bits
    BitVec coords;

    bool is_zero() const { return !coords.any(); }
    bool operator==(const Lie2Element&) const = default;
};

// mu_i (1-based), a degree-1 element.
Lie2Element lie2_generator(int m, int i);
// x + y (same m and degree).
Lie2Element lie2_sum(const Lie2Element& x, const Lie2Element& y);
// [x, y], degree adds.
Lie2Element lie2_bracket(const Lie2Element& x, const Lie2Element& y);
// Left-nested [mu_{i1}, mu_{i2}, ..., mu_{ik}], k >= 1.
Lie2Element lie2_nested(int m, const std::vector<int>& letters);

// Lyndon words of length exactly d over {1..m}, lexicographically sorted.
std::vector<std::vector<int>> lyndon_words(int m, int d);

// Dimension of the degree-d component of the free Lie algebra on m
// generators (necklace formula).
long witt_number(int m, int d);

// Standard bracketings of the length-d Lyndon words: a basis of the
// degree-d component of the free Lie algebra; count equals witt_number.
std::vector<Lie2Element> free_lie_basis(int m, int d);

// [mu_i, mu_j] for each edge {i, j}.
std::vector<Lie2Element> edge_relations(int m,
                                        const std::vector<std::pair<int, int>>& edges);
// [mu_i, mu_j, mu_j] + [mu_i, mu_j, mu_i] for all i < j: the cubic
// consequences of the square identity, valid in L(RC_K) for every K.
std::vector<Lie2Element> square_relations(int m);

// Quotient of the free Lie algebra on m generators by the homogeneous ideal
// generated by the given relations, computed degree by degree up to d_max:
// the degree-d piece of the ideal is spanned by the degree-d relations
// together with brackets of the degree-(d-1) piece with the generators.
class GradedLie2 {
public:
    GradedLie2(int m, int d_max, const std::vector<Lie2Element>& relations);

    int m() const { return m_; }
    int d_max() const { return d_max_; }

    // Quotient dimensions, degrees 1..d_max.
    const std::vector<long>& dims() const { return dims_; }
    long dim(int d) const { return dims_[static_cast<std::size_t>(d - 1)]; }
    // Dimension of the degree-d piece of the relation ideal.
    long ideal_dim(int d) const;

    bool in_ideal(const Lie2Element& x) const;
    // True iff lhs = rhs in the quotient (degrees must match).
    bool relation_holds(const Lie2Element& lhs, const Lie2Element& rhs) const;

private:
    int m_;
    int d_max_;
    std::vector<GF2RowSpace> ideal_;  // index d-1
    std::vector<long> dims_;
};

// Per-degree dimensions of the quotient (degrees 1..d_max).
std::vector<long> quotient_dims(int m,
                                const std::vector<std::pair<int, int>>& edges,
                                const std::vector<Lie2Element>& extra_relations,
                                int d_max);

// True iff lhs = rhs holds in the quotient by edge + extra relations.
bool check_derived_relation(int m, const std::vector<std::pair<int, int>>& edges,
                            const std::vector<Lie2Element>& extra_relations,
                            const Lie2Element& lhs, const Lie2Element& rhs);

// Side-by-side dimensions of the quotient algebra (edge relations of K plus
// the cubic relations) and of L(RC_K) from the group engine, with the
// kernel dimension of the canonical surjection per degree.
struct LieGroupComparison {
    std::vector<long> lie_dims;
    std::vector<long> group_dims;
    std::vector<long> kernel_dims;
};

LieGroupComparison compare_with_group(const SimplicialComplex& k, int d_max);

}  // namespace coxlie
