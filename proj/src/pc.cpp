#include "coxlie/pc.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace coxlie {

namespace {

constexpr std::size_t kMaxCollectionSteps = 50'000'000;

void append_expanded(std::vector<PcLetter>& out, const NormalWord& w) {
    for (const auto& [g, e] : w.terms) {
        const int sign = e > 0 ? 1 : -1;
        for (Exp t = 0, a = e < 0 ? -e : e; t < a; ++t) out.push_back({g, sign});
    }
}

void append_expanded_inverse(std::vector<PcLetter>& out, const NormalWord& w) {
    for (auto it = w.terms.rbegin(); it != w.terms.rend(); ++it) {
        const auto& [g, e] = *it;
        const int sign = e > 0 ? -1 : 1;
        for (Exp t = 0, a = e < 0 ? -e : e; t < a; ++t) out.push_back({g, sign});
    }
}

}  // namespace

std::vector<PcLetter> letters_of(const NormalWord& w) {
    std::vector<PcLetter> out;
    append_expanded(out, w);
    return out;
}

std::vector<PcLetter> inverse_letters_of(const NormalWord& w) {
    std::vector<PcLetter> out;
    append_expanded_inverse(out, w);
    return out;
}

NormalWord PcPresentation::word_from_exps(const std::vector<Exp>& exps) const {
    NormalWord w;
    for (int g = 1; g <= count; ++g)
        if (exps[g] != 0) w.terms.emplace_back(g, exps[g]);
    return w;
}

// ---------------------------------------------------------------------------
// Collection proper.  The normal prefix lives in `exps`; letters not yet
// merged wait on `stack` (top = back).  Merging a letter x = a_g^s into the
// prefix u = P a_g^{e_g} T (T = the part of u above g) rewrites
//
//   u x = P a_g^{e_g + s} [ y_1 C(y_1, x) y_2 C(y_2, x) ... y_r C(y_r, x) ]
//
// where y_1..y_r are the letters of T and C(a_h^tau, a_g^s) is the
// precomputed correction word; the bracketed sequence goes back onto the
// stack.  Tail coordinates are central, so corrections and power relations
// contribute to them by plain exponent bookkeeping.

class CollectorRun {
public:
    CollectorRun(const PcCollector& col, PcPresentation::Collected& st)
        : col_(col), pc_(col.pc_), st_(st) {
        st_.exps.assign(static_cast<std::size_t>(pc_.count) + 1, 0);
        st_.tails.assign(static_cast<std::size_t>(pc_.tail_count), 0);
    }

    void run(const std::vector<PcLetter>& word) {
        stack_.assign(word.rbegin(), word.rend());
        std::size_t steps = 0;
        while (!stack_.empty()) {
            if (++steps > kMaxCollectionSteps)
                throw std::runtime_error("collection did not terminate");
            const PcLetter x = stack_.back();
            stack_.pop_back();
            merge(x.gen, x.sign);
        }
    }

private:
    bool trivial_swap(int h, int g, int s) const {
        if (pc_.weight[h] + pc_.weight[g] > pc_.cls) return true;
        const int tau = st_.exps[h] > 0 ? 1 : -1;
        const auto& c = col_.correction(h, g, tau, s);
        assert(c.built);
        return c.trivial();
    }

    void append_correction(std::vector<PcLetter>& out, int h, int tau, int g,
                           int s) {
        if (pc_.weight[h] + pc_.weight[g] > pc_.cls) return;
        const auto& c = col_.correction(h, g, tau, s);
        assert(c.built);
        for (const auto& [slot, e] : c.tails) st_.tails[slot] += e;
        append_expanded(out, c.base);
    }

    int power_tail(int g) const {
        return pc_.tail_count == 0 ? -1 : pc_.power_tail[g];
    }

    // Reduce exps[g] into [0, order[g]); power-relation letters that have to
    // multiply in at position g are appended (in order) to `pw`.
    void normalize_power(int g, std::vector<PcLetter>& pw) {
        const Exp o = pc_.order[g];
        if (o == 0) return;
        while (st_.exps[g] >= o) {
            st_.exps[g] -= o;
            append_expanded(pw, pc_.power[g]);
            if (const int pt = power_tail(g); pt >= 0) st_.tails[pt] += 1;
        }
        while (st_.exps[g] < 0) {
            st_.exps[g] += o;
            append_expanded_inverse(pw, pc_.power[g]);
            if (const int pt = power_tail(g); pt >= 0) st_.tails[pt] -= 1;
        }
    }

    bool power_adjustment_pending(int g, int s) const {
        const Exp o = pc_.order[g];
        if (o == 0) return false;
        const Exp e = st_.exps[g] + s;
        return e < 0 || e >= o;
    }

    void merge(int g, int s) {
        assert(g >= 1 && g <= pc_.count && (s == 1 || s == -1));
        bool fast = true;
        for (int h = g + 1; h <= pc_.count; ++h) {
            if (st_.exps[h] != 0 && !trivial_swap(h, g, s)) {
                fast = false;
                break;
            }
        }
        // Even with only trivial swaps above g, a pending power relation
        // with non-central right-hand side must multiply in at position g,
        // below the untouched suffix; that needs the slow path.
        if (fast && power_adjustment_pending(g, s) && !pc_.power[g].empty())
            fast = false;

        if (fast) {
            st_.exps[g] += s;
            const Exp o = pc_.order[g];
            if (o != 0) {
                while (st_.exps[g] >= o) {
                    st_.exps[g] -= o;
                    if (const int pt = power_tail(g); pt >= 0)
                        st_.tails[pt] += 1;
                }
                while (st_.exps[g] < 0) {
                    st_.exps[g] += o;
                    if (const int pt = power_tail(g); pt >= 0)
                        st_.tails[pt] -= 1;
                }
            }
            return;
        }

        buf_.clear();
        for (int h = g + 1; h <= pc_.count; ++h) {
            const Exp e = st_.exps[h];
            if (e == 0) continue;
            const int tau = e > 0 ? 1 : -1;
            for (Exp t = 0, a = e < 0 ? -e : e; t < a; ++t) {
                buf_.push_back({h, tau});
                append_correction(buf_, h, tau, g, s);
            }
            st_.exps[h] = 0;
        }
        st_.exps[g] += s;
        pw_.clear();
        normalize_power(g, pw_);
        // Processing order: power letters first, then the displaced suffix.
        for (auto it = buf_.rbegin(); it != buf_.rend(); ++it)
            stack_.push_back(*it);
        for (auto it = pw_.rbegin(); it != pw_.rend(); ++it)
            stack_.push_back(*it);
    }

    const PcCollector& col_;
    const PcPresentation& pc_;
    PcPresentation::Collected& st_;
    std::vector<PcLetter> stack_;
    std::vector<PcLetter> buf_;
    std::vector<PcLetter> pw_;
};

// ---------------------------------------------------------------------------
// Correction tables.  For j > i the stored relation gives the exact element
//   (a_j, a_i) = c * T           (T = the central tail part, if any)
// and the other three sign cases follow from it:
//   (a_j, a_i^-1)  = (a_i c^-1 a_i^-1) * T^-1
//   (a_j^-1, a_i)  = (a_j c^-1 a_j^-1) * T^-1
//   (a_j^-1, a_i^-1) = (a_j a_i c a_i^-1 a_j^-1) * T
// The bracketed words are normalized by collection; every swap they require
// involves a pair of strictly larger total weight (or this pair's already
// finished cases), so building tables in decreasing pair-weight order is
// well founded.

PcCollector::PcCollector(const PcPresentation& pc)
    : pc_(pc), table_(pc.comm.size()) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 2; j <= pc_.count; ++j)
        for (int i = 1; i < j; ++i)
            if (pc_.weight[i] + pc_.weight[j] <= pc_.cls)
                pairs.emplace_back(j, i);
    std::stable_sort(pairs.begin(), pairs.end(),
                     [&](const auto& a, const auto& b) {
                         return pc_.weight[a.first] + pc_.weight[a.second] >
                                pc_.weight[b.first] + pc_.weight[b.second];
                     });
    for (const auto& [j, i] : pairs) build_pair(j, i);
}

PcCollector::Correction PcCollector::sandwich(
    const std::vector<PcLetter>& word, int comm_tail, Exp tail_shift) const {
    PcPresentation::Collected st;
    CollectorRun(*this, st).run(word);
    Correction out;
    out.base = pc_.word_from_exps(st.exps);
    for (int t = 0; t < pc_.tail_count; ++t)
        if (st.tails[t] != 0) out.tails.emplace_back(t, st.tails[t]);
    if (comm_tail >= 0 && tail_shift != 0) {
        bool found = false;
        for (auto& [slot, e] : out.tails)
            if (slot == comm_tail) {
                e += tail_shift;
                found = true;
                break;
            }
        if (!found) out.tails.emplace_back(comm_tail, tail_shift);
        std::erase_if(out.tails, [](const auto& p) { return p.second == 0; });
        std::sort(out.tails.begin(), out.tails.end());
    }
    out.built = true;
    return out;
}

void PcCollector::build_pair(int j, int i) {
    auto& entry = table_[pc_.tri(j, i)];
    const NormalWord& c = pc_.comm_rhs(j, i);
    const int ct = pc_.tail_count == 0 ? -1 : pc_.comm_tail[pc_.tri(j, i)];

    entry[static_cast<std::size_t>(case_index(1, 1))].base = c;
    if (ct >= 0)
        entry[static_cast<std::size_t>(case_index(1, 1))].tails = {{ct, 1}};
    entry[static_cast<std::size_t>(case_index(1, 1))].built = true;

    // (a_j, a_i^-1) = a_i c^-1 a_i^-1 * T^-1
    {
        std::vector<PcLetter> w{{i, 1}};
        append_expanded_inverse(w, c);
        w.push_back({i, -1});
        entry[static_cast<std::size_t>(case_index(1, -1))] = sandwich(w, ct, -1);
    }
    // (a_j^-1, a_i) = a_j c^-1 a_j^-1 * T^-1
    {
        std::vector<PcLetter> w{{j, 1}};
        append_expanded_inverse(w, c);
        w.push_back({j, -1});
        entry[static_cast<std::size_t>(case_index(-1, 1))] = sandwich(w, ct, -1);
    }
    // (a_j^-1, a_i^-1) = a_j a_i c a_i^-1 a_j^-1 * T
    {
        std::vector<PcLetter> w{{j, 1}, {i, 1}};
        append_expanded(w, c);
        w.push_back({i, -1});
        w.push_back({j, -1});
        entry[static_cast<std::size_t>(case_index(-1, -1))] = sandwich(w, ct, 1);
    }
}

PcPresentation::Collected PcCollector::collect(
    const std::vector<PcLetter>& word) const {
    PcPresentation::Collected st;
    CollectorRun(*this, st).run(word);
    return st;
}

PcPresentation::Collected PcPresentation::collect(
    const std::vector<PcLetter>& word) const {
    return PcCollector(*this).collect(word);
}

NormalWord PcPresentation::collect_word(
    const std::vector<PcLetter>& word) const {
    return word_from_exps(collect(word).exps);
}

// ---------------------------------------------------------------------------

namespace {

using Collected = PcPresentation::Collected;

void add_tails(Collected& into, const Collected& from) {
    for (std::size_t t = 0; t < from.tails.size(); ++t)
        into.tails[t] += from.tails[t];
}

std::vector<PcLetter> normal_letters(const PcPresentation& pc,
                                     const Collected& c) {
    std::vector<PcLetter> out;
    for (int g = 1; g <= pc.count; ++g) {
        const Exp e = c.exps[g];
        const int sign = e > 0 ? 1 : -1;
        for (Exp t = 0, a = e < 0 ? -e : e; t < a; ++t) out.push_back({g, sign});
    }
    return out;
}

// collect(prefix . inner . suffix) with inner already collected; its tail
// contributions carry over additively (tails are central).
Collected collect_around(const PcCollector& col,
                         const std::vector<PcLetter>& prefix,
                         const Collected& inner,
                         const std::vector<PcLetter>& suffix) {
    std::vector<PcLetter> word = prefix;
    const auto mid = normal_letters(col.presentation(), inner);
    word.insert(word.end(), mid.begin(), mid.end());
    word.insert(word.end(), suffix.begin(), suffix.end());
    Collected out = col.collect(word);
    add_tails(out, inner);
    return out;
}

Collected blank(const PcPresentation& pc) {
    Collected c;
    c.exps.assign(static_cast<std::size_t>(pc.count) + 1, 0);
    c.tails.assign(static_cast<std::size_t>(pc.tail_count), 0);
    return c;
}

}  // namespace

void for_each_consistency_pair(
    const PcCollector& col,
    const std::function<void(const Collected&, const Collected&)>& fn) {
    const PcPresentation& pc = col.presentation();
    const int n = pc.count;

    // a_k (a_j a_i) = (a_k a_j) a_i for k > j > i.
    for (int k = 3; k <= n; ++k) {
        for (int j = 2; j < k; ++j) {
            if (pc.weight[k] + pc.weight[j] >= pc.cls) continue;
            for (int i = 1; i < j; ++i) {
                if (pc.weight[k] + pc.weight[j] + pc.weight[i] > pc.cls)
                    continue;
                const Collected ji = col.collect({{j, 1}, {i, 1}});
                const Collected lhs = collect_around(col, {{k, 1}}, ji, {});
                const Collected rhs = col.collect({{k, 1}, {j, 1}, {i, 1}});
                fn(lhs, rhs);
            }
        }
    }

    for (int j = 1; j <= n; ++j) {
        // a_j^{o_j} a_j = a_j a_j^{o_j}, comparing the two ways of applying
        // the power relation.  Corrections need weight 2 w_j + 1 <= cls.
        if (pc.order[j] != 0 && 2 * pc.weight[j] + 1 <= pc.cls) {
            Collected base = blank(pc);
            if (pc.tail_count > 0 && pc.power_tail[j] >= 0)
                base.tails[pc.power_tail[j]] = 1;
            const auto w = letters_of(pc.power[j]);
            std::vector<PcLetter> lhs_word = w;
            lhs_word.push_back({j, 1});
            Collected lhs = col.collect(lhs_word);
            add_tails(lhs, base);
            std::vector<PcLetter> rhs_word = {{j, 1}};
            rhs_word.insert(rhs_word.end(), w.begin(), w.end());
            Collected rhs = col.collect(rhs_word);
            add_tails(rhs, base);
            fn(lhs, rhs);
        }
        for (int i = 1; i < j; ++i) {
            if (pc.weight[j] + pc.weight[i] > pc.cls) continue;
            if (pc.order[j] != 0) {
                // a_j^{o_j} a_i = a_j^{o_j - 1} (a_j a_i)
                Collected base = blank(pc);
                if (pc.tail_count > 0 && pc.power_tail[j] >= 0)
                    base.tails[pc.power_tail[j]] = 1;
                auto lhs_word = letters_of(pc.power[j]);
                lhs_word.push_back({i, 1});
                Collected lhs = col.collect(lhs_word);
                add_tails(lhs, base);
                const Collected ji = col.collect({{j, 1}, {i, 1}});
                const std::vector<PcLetter> prefix(
                    static_cast<std::size_t>(pc.order[j] - 1), PcLetter{j, 1});
                const Collected rhs = collect_around(col, prefix, ji, {});
                fn(lhs, rhs);
            }
            if (pc.order[i] != 0) {
                // a_j a_i^{o_i} = (a_j a_i) a_i^{o_i - 1}
                Collected base = blank(pc);
                if (pc.tail_count > 0 && pc.power_tail[i] >= 0)
                    base.tails[pc.power_tail[i]] = 1;
                std::vector<PcLetter> lhs_word = {{j, 1}};
                const auto w = letters_of(pc.power[i]);
                lhs_word.insert(lhs_word.end(), w.begin(), w.end());
                Collected lhs = col.collect(lhs_word);
                add_tails(lhs, base);
                const Collected ji = col.collect({{j, 1}, {i, 1}});
                const std::vector<PcLetter> suffix(
                    static_cast<std::size_t>(pc.order[i] - 1), PcLetter{i, 1});
                const Collected rhs = collect_around(col, {}, ji, suffix);
                fn(lhs, rhs);
            }
            if (pc.order[i] == 0) {
                // (a_j a_i^-1) a_i = a_j
                const Collected inner = col.collect({{j, 1}, {i, -1}});
                const Collected lhs = collect_around(col, {}, inner, {{i, 1}});
                const Collected rhs = col.collect({{j, 1}});
                fn(lhs, rhs);
            }
            if (pc.order[j] == 0) {
                // a_j^-1 (a_j a_i) = a_i
                const Collected inner = col.collect({{j, 1}, {i, 1}});
                const Collected lhs = collect_around(col, {{j, -1}}, inner, {});
                const Collected rhs = col.collect({{i, 1}});
                fn(lhs, rhs);
            }
        }
    }
}

bool consistency_check(const PcPresentation& pc) {
    const PcCollector col(pc);
    bool ok = true;
    for_each_consistency_pair(col,
                              [&](const Collected& a, const Collected& b) {
                                  if (a.exps != b.exps || a.tails != b.tails)
                                      ok = false;
                              });
    return ok;
}

}  // namespace coxlie
