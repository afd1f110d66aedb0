#pragma once

// Weighted polycyclic presentations with collection from the left.
//
// Generators a_1..a_count carry weights compatible with the lower central
// series: the relations are
//   a_i^{order[i]} = power[i]            (only when order[i] > 0)
//   (a_j, a_i)     = comm(j, i)          for j > i, value of weight >= w_i+w_j
// with the convention (a, b) = a^-1 b^-1 a b, so a_j a_i = a_i a_j c.
// Collection drops every commutator correction whose weight exceeds `cls`;
// with relations graded this way the normal form is exact for the class-cls
// quotient.
//
// The same structure doubles as the covering presentation inside the
// quotient engine: relations may then carry central "tail" coordinates
// (unknowns of weight cls), and collection tracks tail exponents alongside
// the ordinary ones.  Finished presentations have no tails.

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "coxlie/exact.hpp"

namespace coxlie {

using Exp = std::int64_t;

struct PcLetter {
    int gen;
    int sign;  // +1 or -1
};

// Exponent words a_{g1}^{e1} ... a_{gk}^{ek} with g1 < g2 < ..., all e != 0.
struct NormalWord {
    std::vector<std::pair<int, Exp>> terms;

    bool empty() const { return terms.empty(); }
    bool operator==(const NormalWord&) const = default;
};

std::vector<PcLetter> letters_of(const NormalWord& w);
std::vector<PcLetter> inverse_letters_of(const NormalWord& w);

enum class DefKind {
    None,        // no defining relation (eliminated image slots)
    Image,       // generator is defined by the image of presentation gen a
    Commutator,  // defined by (a_a, a_b), a > b
    Power        // defined by a_a^{order[a]}
};

struct PcDefinition {
    DefKind kind = DefKind::None;
    int a = 0, b = 0;
};

struct PcPresentation {
    int count = 0;          // pc generators, indexed 1..count
    int cls = 0;            // nilpotency class this presentation realizes
    int fp_generators = 0;  // generators of the finitely presented source

    std::vector<int> weight;          // [1..count]
    std::vector<Exp> order;           // [1..count], 0 = infinite
    std::vector<NormalWord> power;    // [1..count]
    std::vector<NormalWord> comm;     // triangular, see tri()
    std::vector<PcDefinition> definition;  // [1..count]
    std::vector<NormalWord> image;    // [1..fp_generators]
    // gamma_k / gamma_{k+1} for k = 1..cls
    std::vector<AbelianInvariants> graded;

    // Central tail slots attached to not-yet-exact relations (engine only;
    // 0 / empty / -1 on finished presentations).
    int tail_count = 0;
    std::vector<int> power_tail;  // [1..count], -1 = none
    std::vector<int> comm_tail;   // triangular, -1 = none
    std::vector<int> image_tail;  // [1..fp_generators], -1 = none

    std::size_t tri(int j, int i) const {
        // pairs (j, i) with j > i >= 1
        return static_cast<std::size_t>(j - 1) * (j - 2) / 2 +
               static_cast<std::size_t>(i - 1);
    }
    const NormalWord& comm_rhs(int j, int i) const { return comm[tri(j, i)]; }

    struct Collected {
        std::vector<Exp> exps;   // [1..count] generator exponents
        std::vector<Exp> tails;  // tail-slot exponents (empty when no tails)
    };

    // Normal form of the product of the given letters (convenience wrapper
    // that builds a PcCollector per call; loops should build one up front).
    Collected collect(const std::vector<PcLetter>& word) const;
    NormalWord collect_word(const std::vector<PcLetter>& word) const;

    NormalWord word_from_exps(const std::vector<Exp>& exps) const;
};

// Collection engine.  Moving a letter a_g^s left past a_h^tau (h > g)
// inserts the exact correction (a_h^tau, a_g^s); the four sign cases are
// precomputed as normal words by recursion over decreasing pair weight, so
// that collection only ever inserts plain words of strictly larger weight.
class PcCollector {
public:
    explicit PcCollector(const PcPresentation& pc);

    const PcPresentation& presentation() const { return pc_; }
    PcPresentation::Collected collect(const std::vector<PcLetter>& word) const;

private:
    struct Correction {
        NormalWord base;
        std::vector<std::pair<int, Exp>> tails;  // sparse central part
        bool built = false;
        bool trivial() const { return base.empty() && tails.empty(); }
    };

    static int case_index(int tau, int s) {
        return (tau > 0 ? 0 : 2) + (s > 0 ? 0 : 1);
    }
    const Correction& correction(int h, int g, int tau, int s) const {
        return table_[pc_.tri(h, g)][static_cast<std::size_t>(case_index(tau, s))];
    }
    void build_pair(int j, int i);
    Correction sandwich(const std::vector<PcLetter>& word, int comm_tail,
                        Exp tail_shift) const;

    friend class CollectorRun;
    const PcPresentation& pc_;
    std::vector<std::array<Correction, 4>> table_;
};

// Invokes fn(lhs, rhs) for every overlap test of the weighted consistency
// battery (triple overlaps a_k(a_j a_i) = (a_k a_j) a_i, power overlaps, and
// inverse overlaps for infinite-order generators), restricted to overlaps
// whose total weight is at most pc.cls.  Both sides evaluate the same group
// element, so on a consistent presentation lhs and rhs agree exactly.
void for_each_consistency_pair(
    const PcCollector& col,
    const std::function<void(const PcPresentation::Collected&,
                             const PcPresentation::Collected&)>& fn);

// True if the whole battery collects equally on both sides (finished
// presentations only).
bool consistency_check(const PcPresentation& pc);

}  // namespace coxlie
