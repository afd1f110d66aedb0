#include "coxlie/nq.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace coxlie {

namespace {

constexpr int kGeneratorCap = 512;

Exp to_exp(const Int& v) {
    if (v < std::numeric_limits<Exp>::min() || v > std::numeric_limits<Exp>::max())
        throw std::runtime_error("exponent overflow");
    return static_cast<Exp>(v);
}

// ---------------------------------------------------------------------------
// Tail elimination.  Rows span the relations among the tail coordinates; the
// Hermite form classifies each column as eliminated (pivot 1), finite-order
// survivor (pivot d > 1) or free survivor (no pivot).  Back-substitution from
// the right expresses every column over the survivors.

struct TailSolution {
    struct Survivor {
        int col;
        Exp order;                // 0 = infinite
        std::vector<Exp> power;   // rhs of t^order over survivors
        PcDefinition def;
    };
    std::vector<Survivor> survivors;
    std::vector<std::vector<Exp>> expr;  // per column, over survivors
};

TailSolution solve_tails(const IntMatrix& rows,
                         const std::vector<PcDefinition>& source) {
    const std::size_t t = rows.cols();
    const HermiteForm h = hermite_form(rows);
    std::vector<int> pivot_row(t, -1);
    for (std::size_t r = 0; r < h.pivot_cols.size(); ++r)
        pivot_row[h.pivot_cols[r]] = static_cast<int>(r);

    TailSolution out;
    out.expr.assign(t, {});
    std::vector<int> sindex(t, -1);
    for (std::size_t q = 0; q < t; ++q) {
        const int r = pivot_row[q];
        if (r >= 0 && h.mat(r, q) == 1) continue;
        sindex[q] = static_cast<int>(out.survivors.size());
        out.survivors.push_back({static_cast<int>(q),
                                 r >= 0 ? to_exp(h.mat(r, q)) : 0,
                                 {},
                                 source[q]});
    }
    const std::size_t s = out.survivors.size();

    // Fold multiples of survivor orders back in via their power relations so
    // all stored exponents are canonical.
    auto reduce = [&](std::vector<Exp>& v) {
        for (std::size_t i = 0; i < s; ++i) {
            const Exp o = out.survivors[i].order;
            if (o == 0 || v[i] == 0) continue;
            Exp r = v[i] % o;
            if (r < 0) r += o;
            const Exp delta = (v[i] - r) / o;
            v[i] = r;
            if (delta != 0) {
                const auto& pw = out.survivors[i].power;
                for (std::size_t j = i + 1; j < s; ++j) v[j] += delta * pw[j];
            }
        }
    };

    for (std::size_t q1 = t; q1-- > 0;) {
        const int r = pivot_row[q1];
        auto tail_of_row = [&](std::vector<Exp>& v) {
            for (std::size_t p = q1 + 1; p < t; ++p) {
                const Exp c = to_exp(h.mat(r, p));
                if (c == 0) continue;
                for (std::size_t j = 0; j < s; ++j)
                    v[j] -= c * out.expr[p][j];
            }
        };
        if (sindex[q1] >= 0) {
            auto& sv = out.survivors[sindex[q1]];
            out.expr[q1].assign(s, 0);
            out.expr[q1][sindex[q1]] = 1;
            if (sv.order > 0) {
                sv.power.assign(s, 0);
                tail_of_row(sv.power);
                reduce(sv.power);
            }
        } else {
            out.expr[q1].assign(s, 0);
            tail_of_row(out.expr[q1]);
            reduce(out.expr[q1]);
        }
    }
    return out;
}

NormalWord word_over_survivors(const std::vector<Exp>& v, int base) {
    NormalWord w;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            w.terms.emplace_back(base + 1 + static_cast<int>(i), v[i]);
    return w;
}

// ---------------------------------------------------------------------------

std::vector<PcLetter> image_letters(const PcPresentation& pc,
                                    const FreeWord& w) {
    std::vector<PcLetter> out;
    for (const FreeLetter& l : w.letters()) {
        assert(l.gen >= 1 && l.gen <= pc.fp_generators);
        const auto part = l.sign > 0 ? letters_of(pc.image[l.gen])
                                     : inverse_letters_of(pc.image[l.gen]);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

PcPresentation class_one(const GroupPresentation& g) {
    const int m = g.generators;
    IntMatrix rel(g.relators.size(), static_cast<std::size_t>(m));
    for (std::size_t r = 0; r < g.relators.size(); ++r)
        for (const FreeLetter& l : g.relators[r].letters()) {
            if (l.gen < 1 || l.gen > m)
                throw std::invalid_argument("relator uses an unknown generator");
            rel(r, static_cast<std::size_t>(l.gen - 1)) += l.sign;
        }

    std::vector<PcDefinition> source(static_cast<std::size_t>(m));
    for (int f = 1; f <= m; ++f)
        source[static_cast<std::size_t>(f - 1)] = {DefKind::Image, f, 0};
    const TailSolution sol = solve_tails(rel, source);
    const int n = static_cast<int>(sol.survivors.size());

    PcPresentation pc;
    pc.count = n;
    pc.cls = 1;
    pc.fp_generators = m;
    pc.weight.assign(static_cast<std::size_t>(n) + 1, 1);
    pc.weight[0] = 0;
    pc.order.assign(static_cast<std::size_t>(n) + 1, 0);
    pc.power.assign(static_cast<std::size_t>(n) + 1, {});
    pc.definition.assign(static_cast<std::size_t>(n) + 1, {});
    pc.comm.assign(static_cast<std::size_t>(n) * (n - 1) / 2, {});
    pc.image.assign(static_cast<std::size_t>(m) + 1, {});
    for (int i = 0; i < n; ++i) {
        const auto& sv = sol.survivors[i];
        pc.order[i + 1] = sv.order;
        pc.definition[i + 1] = sv.def;
        if (sv.order > 0) pc.power[i + 1] = word_over_survivors(sv.power, 0);
    }
    for (int f = 1; f <= m; ++f)
        pc.image[f] = word_over_survivors(sol.expr[static_cast<std::size_t>(f - 1)], 0);
    pc.graded.push_back(cokernel_invariants(rel));
    return pc;
}

// Extends a consistent class-(k-1) presentation to class k.
void extend(PcPresentation& pc, const GroupPresentation& g, int k) {
    const int n = pc.count;

    std::vector<char> power_defined(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> image_defined(static_cast<std::size_t>(pc.fp_generators) + 1, 0);
    std::vector<char> comm_defined(pc.comm.size(), 0);
    for (int d = 1; d <= n; ++d) {
        const PcDefinition& def = pc.definition[d];
        switch (def.kind) {
            case DefKind::Image: image_defined[def.a] = 1; break;
            case DefKind::Power: power_defined[def.a] = 1; break;
            case DefKind::Commutator: comm_defined[pc.tri(def.a, def.b)] = 1; break;
            case DefKind::None: break;
        }
    }

    // Tail slots: powers first, then images, then commutators whose right
    // entry has weight >= 2, and commutators (a_j, a_i) with w(a_i) = 1
    // last.  Elimination prefers early columns, so surviving tails (the new
    // generators) tend to be defined by commutators with a weight-1 entry.
    pc.power_tail.assign(static_cast<std::size_t>(n) + 1, -1);
    pc.image_tail.assign(static_cast<std::size_t>(pc.fp_generators) + 1, -1);
    pc.comm_tail.assign(pc.comm.size(), -1);
    std::vector<PcDefinition> source;
    int tails = 0;
    for (int i = 1; i <= n; ++i)
        if (pc.order[i] != 0 && !power_defined[i]) {
            pc.power_tail[i] = tails++;
            source.push_back({DefKind::Power, i, 0});
        }
    for (int f = 1; f <= pc.fp_generators; ++f)
        if (!image_defined[f]) {
            pc.image_tail[f] = tails++;
            source.push_back({DefKind::Image, f, 0});
        }
    for (int min_weight : {2, 1}) {
        for (int j = 2; j <= n; ++j)
            for (int i = 1; i < j; ++i) {
                if (pc.weight[i] + pc.weight[j] > k) continue;
                const bool deep = pc.weight[i] >= 2;
                if (deep != (min_weight == 2)) continue;
                if (comm_defined[pc.tri(j, i)]) continue;
                pc.comm_tail[pc.tri(j, i)] = tails++;
                source.push_back({DefKind::Commutator, j, i});
            }
    }
    pc.tail_count = tails;
    pc.cls = k;

    // Linear system over the tails: consistency battery plus relators.
    const PcCollector collector(pc);
    std::vector<std::vector<Exp>> rows;
    auto push_row = [&](std::vector<Exp> row) {
        for (const Exp e : row)
            if (e != 0) {
                rows.push_back(std::move(row));
                return;
            }
    };
    for_each_consistency_pair(
        collector, [&](const PcPresentation::Collected& a,
                       const PcPresentation::Collected& b) {
            assert(a.exps == b.exps);
            std::vector<Exp> row(static_cast<std::size_t>(tails), 0);
            for (int t = 0; t < tails; ++t) row[t] = a.tails[t] - b.tails[t];
            push_row(std::move(row));
        });
    for (const FreeWord& r : g.relators) {
        PcPresentation::Collected c = collector.collect(image_letters(pc, r));
        for (const FreeLetter& l : r.letters())
            if (pc.image_tail[l.gen] >= 0) c.tails[pc.image_tail[l.gen]] += l.sign;
        for (int i = 1; i <= n; ++i) assert(c.exps[i] == 0);
        push_row(std::move(c.tails));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    IntMatrix mat(rows.size(), static_cast<std::size_t>(tails));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int t = 0; t < tails; ++t) mat(r, t) = rows[r][t];

    const TailSolution sol = solve_tails(mat, source);
    const int fresh = static_cast<int>(sol.survivors.size());
    if (n + fresh > kGeneratorCap)
        throw std::runtime_error("generator cap exceeded");

    pc.weight.resize(static_cast<std::size_t>(n + fresh) + 1, k);
    pc.order.resize(static_cast<std::size_t>(n + fresh) + 1, 0);
    pc.power.resize(static_cast<std::size_t>(n + fresh) + 1, {});
    pc.definition.resize(static_cast<std::size_t>(n + fresh) + 1, {});
    pc.comm.resize(static_cast<std::size_t>(n + fresh) *
                       static_cast<std::size_t>(n + fresh - 1) / 2,
                   {});
    for (int i = 0; i < fresh; ++i) {
        const auto& sv = sol.survivors[i];
        const int d = n + 1 + i;
        pc.order[d] = sv.order;
        pc.definition[d] = sv.def;
        if (sv.order > 0) pc.power[d] = word_over_survivors(sv.power, n);
    }

    // Substitute the solved tails back into their relations.
    auto subst = [&](NormalWord& w, int tail) {
        if (tail < 0) return;
        const auto& e = sol.expr[static_cast<std::size_t>(tail)];
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                w.terms.emplace_back(n + 1 + static_cast<int>(i), e[i]);
    };
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i)
            subst(pc.comm[pc.tri(j, i)], pc.comm_tail[pc.tri(j, i)]);
    for (int i = 1; i <= n; ++i) subst(pc.power[i], pc.power_tail[i]);
    for (int f = 1; f <= pc.fp_generators; ++f)
        subst(pc.image[f], pc.image_tail[f]);

    pc.count = n + fresh;
    pc.graded.push_back(cokernel_invariants(mat));

    pc.tail_count = 0;
    pc.power_tail.assign(pc.power_tail.size(), -1);
    pc.image_tail.assign(pc.image_tail.size(), -1);
    pc.comm_tail.assign(pc.comm.size(), -1);
}

}  // namespace

GroupPresentation free_presentation(int m) {
    if (m < 0) throw std::invalid_argument("negative generator count");
    return {m, {}};
}

GroupPresentation racg_presentation(const SimplicialComplex& k) {
    GroupPresentation g;
    g.generators = k.m();
    for (int i = 1; i <= k.m(); ++i)
        g.relators.push_back(power(FreeWord::generator(i), 2));
    for (const auto& [i, j] : k.edges())
        g.relators.push_back(
            commutator(FreeWord::generator(i), FreeWord::generator(j)));
    return g;
}

int class_cap() {
    int cap = 5;
    if (const char* env = std::getenv("RACG_LCS_MAX_CLASS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v < cap) cap = static_cast<int>(v);
    }
    return cap;
}

PcPresentation nilpotent_quotient(const GroupPresentation& g, int c) {
    if (c < 1) throw std::invalid_argument("class must be at least 1");
    if (c > class_cap())
        throw std::invalid_argument("class exceeds cap of " +
                                    std::to_string(class_cap()));
    PcPresentation pc = class_one(g);
    for (int k = 2; k <= c; ++k) {
        if (pc.graded.back().is_trivial()) break;  // series has stabilized
        extend(pc, g, k);
    }
    while (static_cast<int>(pc.graded.size()) < c) pc.graded.push_back({});
    pc.cls = c;
    return pc;
}

std::vector<long> lcs_dims(const SimplicialComplex& k, int c) {
    if (k.m() > 5) throw std::invalid_argument("at most 5 vertices supported");
    const PcPresentation pc = nilpotent_quotient(racg_presentation(k), c);
    std::vector<long> dims(static_cast<std::size_t>(c), 0);
    for (int i = 1; i <= pc.count; ++i) {
        assert(pc.order[i] == 2);  // every layer is elementary abelian
        dims[static_cast<std::size_t>(pc.weight[i] - 1)] += 1;
    }
    return dims;
}

std::optional<std::vector<Exp>> express(const PcPresentation& pc,
                                        const FreeWord& w, int k) {
    if (k < 1 || k > pc.cls) throw std::invalid_argument("weight out of range");
    if (w.max_generator() > pc.fp_generators)
        throw std::invalid_argument("word uses an unknown generator");
    const PcPresentation::Collected c = pc.collect(image_letters(pc, w));
    std::vector<Exp> coords;
    for (int i = 1; i <= pc.count; ++i) {
        if (pc.weight[i] < k && c.exps[i] != 0) return std::nullopt;
        if (pc.weight[i] == k) coords.push_back(c.exps[i]);
    }
    return coords;
}

bool verify_basis_claim(const SimplicialComplex& k, int deg,
                        const std::vector<std::vector<int>>& commutators) {
    const PcPresentation pc = nilpotent_quotient(racg_presentation(k), deg);
    std::size_t dim = 0;
    for (int i = 1; i <= pc.count; ++i)
        if (pc.weight[i] == deg) {
            assert(pc.order[i] == 2);
            ++dim;
        }
    if (commutators.size() != dim) return false;
    GF2RowSpace space(dim);
    for (const auto& tuple : commutators) {
        if (tuple.empty()) return false;
        const auto coords = express(pc, simple_nested(tuple), deg);
        if (!coords) return false;
        BitVec row(dim);
        for (std::size_t i = 0; i < dim; ++i)
            if ((*coords)[i] % 2 != 0) row.set(i, true);
        if (!space.add(row)) return false;  // dependent, not a basis
    }
    return true;
}

bool verify_congruence(const FreeWord& lhs, const FreeWord& rhs, int c) {
    if (c <= 1) return true;  // gamma_1 is the whole group
    const int m = std::max({lhs.max_generator(), rhs.max_generator(), 1});
    const PcPresentation pc = nilpotent_quotient(free_presentation(m), c - 1);
    const FreeWord w = lhs * rhs.inverse();
    const PcPresentation::Collected col = pc.collect(image_letters(pc, w));
    for (int i = 1; i <= pc.count; ++i)
        if (col.exps[i] != 0) return false;
    return true;
}

}  // namespace coxlie
