#pragma once

// Exact linear algebra: dense matrices over arbitrary-precision integers
// (Smith and Hermite normal forms) and bit-packed GF(2) matrices.  No
// floating point anywhere; everything is exact.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace coxlie {

using Int = boost::multiprecision::cpp_int;

// Dense row-major matrix over Z.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const IntMatrix&) const = default;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[dst] += k * row[src]; col[dst] += k * col[src]
    void add_row(std::size_t dst, std::size_t src, const Int& k);
    void add_col(std::size_t dst, std::size_t src, const Int& k);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    IntMatrix transposed() const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

// u * a * v = diag(divisors), with u, v unimodular and d1 | d2 | ... | dr > 0.
struct SmithDecomposition {
    std::vector<Int> divisors;
    IntMatrix u, v;  // empty unless requested
    std::size_t rank() const { return divisors.size(); }
};

SmithDecomposition smith_normal_form(IntMatrix a, bool with_transforms = false);

// Row echelon form over Z: pivots positive, one pivot per column, rows sorted
// by pivot column, and entries above each pivot and in later pivot columns
// reduced modulo that pivot.  The row lattice is preserved exactly.
struct HermiteForm {
    IntMatrix mat;                        // rank-many reduced rows
    std::vector<std::size_t> pivot_cols;  // strictly increasing
};

HermiteForm hermite_form(const IntMatrix& a);

// Determinant by fraction-free (Bareiss) elimination; square matrices only.
Int determinant(IntMatrix a);

// Isomorphism type of a finitely generated abelian group: Z^free_rank plus
// cyclic factors in a divisibility chain t1 | t2 | ..., each > 1.
struct AbelianInvariants {
    long free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const AbelianInvariants&) const = default;
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    // As a flat list, torsion chain first, then one 0 per free factor.
    std::vector<Int> as_list() const;
};

// Normalizes an arbitrary multiset of cyclic orders into a divisor chain
// (prime-power bucketing; entries are small in practice).
AbelianInvariants make_invariants(long free_rank, std::vector<Int> cyclic_orders);

AbelianInvariants direct_sum(const AbelianInvariants& a, const AbelianInvariants& b);

// Invariants of Z^cols / (row lattice of a).
AbelianInvariants cokernel_invariants(const IntMatrix& a);

// ---------------------------------------------------------------------------

// Bit-packed vector over GF(2).
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64) {}

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v) words_[i >> 6] |= m; else words_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVec& operator^=(const BitVec& o);
    bool any() const;
    std::size_t popcount() const;
    // index of lowest set bit, or size() if none
    std::size_t lowest_set() const;

    bool operator==(const BitVec&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Matrix over GF(2); rows are BitVecs.
class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols)
        : cols_(cols), rows_(rows, BitVec(cols)) {}

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }

    BitVec& row(std::size_t r) { return rows_[r]; }
    const BitVec& row(std::size_t r) const { return rows_[r]; }
    void append_row(BitVec v);

    bool operator==(const GF2Matrix&) const = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

std::size_t gf2_rank(GF2Matrix a);

// One solution x of a x = b (column-vector convention), if any.
std::optional<BitVec> gf2_solve(GF2Matrix a, const BitVec& b);

// Basis of { x : a x = 0 }.
std::vector<BitVec> gf2_nullspace(GF2Matrix a);

// Incremental row-space accumulator: add rows, query rank and membership.
class GF2RowSpace {
public:
    explicit GF2RowSpace(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return basis_.size(); }
    // Reduces v against the basis; if nonzero remains, adds it and returns
    // true (rank grew).
    bool add(BitVec v);
    bool contains(BitVec v) const;

private:
    std::size_t cols_;
    std::vector<BitVec> basis_;            // echelonized rows
    std::vector<std::size_t> pivots_;      // pivot column of each basis row
};

}  // namespace coxlie
