#include "coxlie/free_word.hpp"

#include <cassert>
#include <cstdlib>

namespace coxlie {

FreeWord FreeWord::generator(int i) {
    assert(i >= 1);
    FreeWord w;
    w.letters_.push_back({i, 1});
    return w;
}

FreeWord FreeWord::from_letters(const std::vector<FreeLetter>& letters) {
    FreeWord w;
    for (const FreeLetter& l : letters) {
        assert(l.gen >= 1 && (l.sign == 1 || l.sign == -1));
        if (!w.letters_.empty() && w.letters_.back().gen == l.gen &&
            w.letters_.back().sign == -l.sign)
            w.letters_.pop_back();
        else
            w.letters_.push_back(l);
    }
    return w;
}

int FreeWord::max_generator() const {
    int m = 0;
    for (const FreeLetter& l : letters_) m = std::max(m, l.gen);
    return m;
}

FreeWord FreeWord::inverse() const {
    FreeWord w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back({it->gen, -it->sign});
    return w;  // reversal of a reduced word is reduced
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
    FreeWord w = a;
    for (const FreeLetter& l : b.letters()) {
        if (!w.letters_.empty() && w.letters_.back().gen == l.gen &&
            w.letters_.back().sign == -l.sign)
            w.letters_.pop_back();
        else
            w.letters_.push_back(l);
    }
    return w;
}

FreeWord power(const FreeWord& a, int n) {
    FreeWord base = n < 0 ? a.inverse() : a;
    FreeWord w;
    for (int t = 0; t < std::abs(n); ++t) w = w * base;
    return w;
}

FreeWord conjugate(const FreeWord& a, const FreeWord& b) {
    return b.inverse() * a * b;
}

FreeWord commutator(const FreeWord& a, const FreeWord& b) {
    return a.inverse() * b.inverse() * a * b;
}

FreeWord simple_nested(const std::vector<int>& gens) {
    assert(!gens.empty());
    FreeWord w = FreeWord::generator(gens[0]);
    for (std::size_t t = 1; t < gens.size(); ++t)
        w = commutator(w, FreeWord::generator(gens[t]));
    return w;
}

bool verify_hall_witt(const FreeWord& a, const FreeWord& b, const FreeWord& c) {
    auto nest = [](const FreeWord& x, const FreeWord& y, const FreeWord& z) {
        return commutator(commutator(x, y), z);
    };
    // (a, bc) = (a, c) (a, b) (a, b, c)
    bool first = commutator(a, b * c) ==
                 commutator(a, c) * commutator(a, b) * nest(a, b, c);
    // (ab, c) = (a, c) (a, c, b) (b, c)
    bool second = commutator(a * b, c) ==
                  commutator(a, c) * nest(a, c, b) * commutator(b, c);
    // (a,b,c)(b,c,a)(c,a,b) = (b,a)(c,a)(c,b)^a (a,b)(a,c)^b (b,c)^a (a,c)(c,a)^b
    bool third = nest(a, b, c) * nest(b, c, a) * nest(c, a, b) ==
                 commutator(b, a) * commutator(c, a) * conjugate(commutator(c, b), a) *
                     commutator(a, b) * conjugate(commutator(a, c), b) *
                     conjugate(commutator(b, c), a) * commutator(a, c) *
                     conjugate(commutator(c, a), b);
    return first && second && third;
}

bool verify_triple_lemma(const FreeWord& a, const FreeWord& b, const FreeWord& c) {
    // (a,(b,c)) = (a,c)(c,(b,a))(a,b)(c,b)(b,(a,c))(c,a)(b,a)(b,c)
    bool first =
        commutator(a, commutator(b, c)) ==
        commutator(a, c) * commutator(c, commutator(b, a)) * commutator(a, b) *
            commutator(c, b) * commutator(b, commutator(a, c)) * commutator(c, a) *
            commutator(b, a) * commutator(b, c);
    // ((a,b),c) = (b,a)(c,a)(c,b)((c,b),a)(a,b)(a,c)((a,c),b)(b,c)
    bool second =
        commutator(commutator(a, b), c) ==
        commutator(b, a) * commutator(c, a) * commutator(c, b) *
            commutator(commutator(c, b), a) * commutator(a, b) * commutator(a, c) *
            commutator(commutator(a, c), b) * commutator(b, c);
    return first && second;
}

}  // namespace coxlie
