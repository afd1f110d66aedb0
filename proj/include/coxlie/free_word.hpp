#pragma once

// Freely reduced words over a free group with numbered generators, plus the
// commutator identities used throughout: the convention is
//   (a, b) = a^-1 b^-1 a b,      a^b = b^-1 a b,
// and simple nested commutators associate to the left:
//   (a, b, c) = ((a, b), c).

#include <cstdint>
#include <vector>

namespace coxlie {

struct FreeLetter {
    int gen;   // generator index, >= 1
    int sign;  // +1 or -1
    bool operator==(const FreeLetter&) const = default;
};

class FreeWord {
public:
    FreeWord() = default;
    static FreeWord generator(int i);
    // Free reduction is applied; signs must be +-1.
    static FreeWord from_letters(const std::vector<FreeLetter>& letters);

    const std::vector<FreeLetter>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }
    int max_generator() const;

    FreeWord inverse() const;
    friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
    bool operator==(const FreeWord&) const = default;

private:
    std::vector<FreeLetter> letters_;
};

FreeWord power(const FreeWord& a, int n);
FreeWord conjugate(const FreeWord& a, const FreeWord& b);  // a^b
FreeWord commutator(const FreeWord& a, const FreeWord& b);
// (g_{gens[0]}, g_{gens[1]}, ..., g_{gens[k-1]}), left-nested; k >= 1.
FreeWord simple_nested(const std::vector<int>& gens);

// The three Hall-Witt style expansion identities, checked verbatim on one
// triple of words; true iff all hold (they always do - the checkers exist to
// pin the stated forms against an independent engine).
bool verify_hall_witt(const FreeWord& a, const FreeWord& b, const FreeWord& c);
// The two eight-factor expansions of (a,(b,c)) and ((a,b),c).
bool verify_triple_lemma(const FreeWord& a, const FreeWord& b, const FreeWord& c);

// Uniformly random reduced word of length <= max_len over gens 1..m, driven
// by the caller's generator so trials are reproducible.
template <typename Rng>
FreeWord random_word(Rng& rng, int m, int max_len) {
    std::vector<FreeLetter> letters;
    int len = static_cast<int>(rng() % static_cast<std::uint64_t>(max_len + 1));
    for (int t = 0; t < len; ++t)
        letters.push_back({static_cast<int>(rng() % static_cast<std::uint64_t>(m)) + 1,
                           rng() % 2 ? 1 : -1});
    return FreeWord::from_letters(letters);
}

}  // namespace coxlie
