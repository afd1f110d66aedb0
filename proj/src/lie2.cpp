#include "coxlie/lie2.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "coxlie/nq.hpp"

namespace coxlie {

namespace {

std::size_t pow_m(int m, int d) {
    std::size_t p = 1;
    for (int t = 0; t < d; ++t) p *= static_cast<std::size_t>(m);
    return p;
}

void check_alphabet(int m) {
    if (m < 1 || m > 8)
        throw std::invalid_argument("generator count out of range (1..8)");
}

std::vector<std::size_t> set_bits(const BitVec& v) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v.get(i)) out.push_back(i);
    return out;
}

}  // namespace

Lie2Element lie2_generator(int m, int i) {
    check_alphabet(m);
    if (i < 1 || i > m) throw std::invalid_argument("generator index out of range");
    Lie2Element x{m, 1, BitVec(static_cast<std::size_t>(m))};
    x.coords.set(static_cast<std::size_t>(i - 1), true);
    return x;
}

Lie2Element lie2_sum(const Lie2Element& x, const Lie2Element& y) {
    if (x.m != y.m || x.degree != y.degree)
        throw std::invalid_argument("sum of inhomogeneous elements");
    Lie2Element out = x;
    out.coords ^= y.coords;
    return out;
}

Lie2Element lie2_bracket(const Lie2Element& x, const Lie2Element& y) {
    if (x.m != y.m) throw std::invalid_argument("bracket over different alphabets");
    const int m = x.m;
    const int d = x.degree + y.degree;
    Lie2Element out{m, d, BitVec(pow_m(m, d))};
    const std::size_t shift_x = pow_m(m, y.degree);
    const std::size_t shift_y = pow_m(m, x.degree);
    for (const std::size_t u : set_bits(x.coords))
        for (const std::size_t v : set_bits(y.coords)) {
            out.coords.flip(u * shift_x + v);  // word uv
            out.coords.flip(v * shift_y + u);  // word vu
        }
    return out;
}

Lie2Element lie2_nested(int m, const std::vector<int>& letters) {
    if (letters.empty()) throw std::invalid_argument("empty bracket");
    Lie2Element acc = lie2_generator(m, letters[0]);
    for (std::size_t t = 1; t < letters.size(); ++t)
        acc = lie2_bracket(acc, lie2_generator(m, letters[t]));
    return acc;
}

std::vector<std::vector<int>> lyndon_words(int m, int d) {
    check_alphabet(m);
    if (d < 1) throw std::invalid_argument("length must be positive");
    std::vector<std::vector<int>> out;
    std::vector<int> w{0};
    while (!w.empty()) {
        if (static_cast<int>(w.size()) == d) {
            std::vector<int> labeled(w.size());
            std::transform(w.begin(), w.end(), labeled.begin(),
                           [](int c) { return c + 1; });
            out.push_back(std::move(labeled));
        }
        const std::size_t sz = w.size();
        while (w.size() < static_cast<std::size_t>(d)) w.push_back(w[w.size() - sz]);
        while (!w.empty() && w.back() == m - 1) w.pop_back();
        if (!w.empty()) ++w.back();
    }
    return out;
}

long witt_number(int m, int d) {
    check_alphabet(m);
    if (d < 1) throw std::invalid_argument("degree must be positive");
    const auto mobius = [](int n) {
        int mu = 1;
        for (int p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0;
                mu = -mu;
            }
        if (n > 1) mu = -mu;
        return mu;
    };
    long long total = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        long long pw = 1;
        for (int t = 0; t < d / e; ++t) pw *= m;
        total += mobius(e) * pw;
    }
    return static_cast<long>(total / d);
}

namespace {

// Standard bracketing of a Lyndon word (1-based letters): split off the
// lexicographically smallest proper suffix v (itself Lyndon), recurse on
// both halves.
Lie2Element standard_bracketing(int m, const std::vector<int>& w) {
    if (w.size() == 1) return lie2_generator(m, w[0]);
    std::size_t best = 1;
    for (std::size_t s = 2; s < w.size(); ++s)
        if (std::lexicographical_compare(w.begin() + static_cast<std::ptrdiff_t>(s),
                                         w.end(),
                                         w.begin() + static_cast<std::ptrdiff_t>(best),
                                         w.end()))
            best = s;
    const std::vector<int> u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(best));
    const std::vector<int> v(w.begin() + static_cast<std::ptrdiff_t>(best), w.end());
    return lie2_bracket(standard_bracketing(m, u), standard_bracketing(m, v));
}

}  // namespace

std::vector<Lie2Element> free_lie_basis(int m, int d) {
    std::vector<Lie2Element> out;
    for (const auto& w : lyndon_words(m, d)) out.push_back(standard_bracketing(m, w));
    return out;
}

std::vector<Lie2Element> edge_relations(
    int m, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Lie2Element> out;
    for (const auto& [i, j] : edges)
        out.push_back(lie2_bracket(lie2_generator(m, i), lie2_generator(m, j)));
    return out;
}

std::vector<Lie2Element> square_relations(int m) {
    std::vector<Lie2Element> out;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            out.push_back(lie2_sum(lie2_nested(m, {i, j, j}),
                                   lie2_nested(m, {i, j, i})));
    return out;
}

GradedLie2::GradedLie2(int m, int d_max, const std::vector<Lie2Element>& relations)
    : m_(m), d_max_(d_max) {
    check_alphabet(m);
    if (d_max < 1 || d_max > 5)
        throw std::invalid_argument("degree cap out of range (1..5)");
    for (const auto& r : relations) {
        if (r.m != m) throw std::invalid_argument("relation over a different alphabet");
        if (r.degree < 1) throw std::invalid_argument("relation of nonpositive degree");
    }
    std::vector<Lie2Element> prev;
    for (int d = 1; d <= d_max; ++d) {
        GF2RowSpace space(pow_m(m, d));
        std::vector<Lie2Element> cur;
        const auto feed = [&](Lie2Element x) {
            if (space.add(x.coords)) cur.push_back(std::move(x));
        };
        for (const auto& p : prev)
            for (int g = 1; g <= m; ++g) feed(lie2_bracket(p, lie2_generator(m, g)));
        for (const auto& r : relations)
            if (r.degree == d) feed(r);
        dims_.push_back(witt_number(m, d) - static_cast<long>(space.rank()));
        ideal_.push_back(std::move(space));
        prev = std::move(cur);
    }
}

long GradedLie2::ideal_dim(int d) const {
    if (d < 1 || d > d_max_) throw std::invalid_argument("degree out of range");
    return static_cast<long>(ideal_[static_cast<std::size_t>(d - 1)].rank());
}

bool GradedLie2::in_ideal(const Lie2Element& x) const {
    if (x.m != m_) throw std::invalid_argument("element over a different alphabet");
    if (x.degree < 1 || x.degree > d_max_)
        throw std::invalid_argument("degree out of range");
    return ideal_[static_cast<std::size_t>(x.degree - 1)].contains(x.coords);
}

bool GradedLie2::relation_holds(const Lie2Element& lhs, const Lie2Element& rhs) const {
    if (lhs.degree != rhs.degree || lhs.m != rhs.m)
        throw std::invalid_argument("degree mismatch");
    return in_ideal(lie2_sum(lhs, rhs));
}

std::vector<long> quotient_dims(int m,
                                const std::vector<std::pair<int, int>>& edges,
                                const std::vector<Lie2Element>& extra_relations,
                                int d_max) {
    std::vector<Lie2Element> relations = edge_relations(m, edges);
    relations.insert(relations.end(), extra_relations.begin(), extra_relations.end());
    return GradedLie2(m, d_max, relations).dims();
}

bool check_derived_relation(int m, const std::vector<std::pair<int, int>>& edges,
                            const std::vector<Lie2Element>& extra_relations,
                            const Lie2Element& lhs, const Lie2Element& rhs) {
    if (lhs.degree != rhs.degree || lhs.m != rhs.m)
        throw std::invalid_argument("degree mismatch");
    std::vector<Lie2Element> relations = edge_relations(m, edges);
    relations.insert(relations.end(), extra_relations.begin(), extra_relations.end());
    return GradedLie2(m, lhs.degree, relations).relation_holds(lhs, rhs);
}

LieGroupComparison compare_with_group(const SimplicialComplex& k, int d_max) {
    std::vector<Lie2Element> relations = edge_relations(k.m(), k.edges());
    const std::vector<Lie2Element> cubes = square_relations(k.m());
    relations.insert(relations.end(), cubes.begin(), cubes.end());
    const GradedLie2 quotient(k.m(), d_max, relations);

    LieGroupComparison out;
    out.lie_dims = quotient.dims();
    out.group_dims = lcs_dims(k, d_max);
    for (int d = 1; d <= d_max; ++d)
        out.kernel_dims.push_back(out.lie_dims[static_cast<std::size_t>(d - 1)] -
                                  out.group_dims[static_cast<std::size_t>(d - 1)]);
    return out;
}

}  // namespace coxlie
