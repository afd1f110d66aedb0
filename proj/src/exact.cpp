#include "coxlie/exact.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <functional>
#include <stdexcept>
#include <utility>

namespace coxlie {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) data_[a * cols_ + c].swap(data_[b * cols_ + c]);
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) data_[r * cols_ + a].swap(data_[r * cols_ + b]);
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Int& k) {
    for (std::size_t c = 0; c < cols_; ++c) data_[dst * cols_ + c] += k * data_[src * cols_ + c];
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Int& k) {
    for (std::size_t r = 0; r < rows_; ++r) data_[r * cols_ + dst] += k * data_[r * cols_ + src];
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) data_[r * cols_ + c] = -data_[r * cols_ + c];
}

void IntMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) data_[r * cols_ + c] = -data_[r * cols_ + c];
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    assert(a.cols() == b.rows());
    IntMatrix p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += aik * b(k, j);
        }
    return p;
}

namespace {

// Smallest-magnitude nonzero entry of a[t.., t..], if any.
std::optional<std::pair<std::size_t, std::size_t>>
find_pivot(const IntMatrix& a, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs;
    for (std::size_t r = t; r < a.rows(); ++r)
        for (std::size_t c = t; c < a.cols(); ++c) {
            if (a(r, c) == 0) continue;
            Int v = abs(a(r, c));
            if (!best || v < best_abs) {
                best = {r, c};
                best_abs = v;
                if (best_abs == 1) return best;
            }
        }
    return best;
}

}  // namespace

SmithDecomposition smith_normal_form(IntMatrix a, bool with_transforms) {
    SmithDecomposition res;
    if (with_transforms) {
        res.u = IntMatrix::identity(a.rows());
        res.v = IntMatrix::identity(a.cols());
    }
    auto row_op = [&](std::size_t dst, std::size_t src, const Int& k) {
        a.add_row(dst, src, k);
        if (with_transforms) res.u.add_row(dst, src, k);
    };
    auto col_op = [&](std::size_t dst, std::size_t src, const Int& k) {
        a.add_col(dst, src, k);
        if (with_transforms) res.v.add_col(dst, src, k);
    };

    std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < n; ++t) {
        auto piv = find_pivot(a, t);
        if (!piv) break;
        for (;;) {
            a.swap_rows(t, piv->first);
            a.swap_cols(t, piv->second);
            if (with_transforms) {
                res.u.swap_rows(t, piv->first);
                res.v.swap_cols(t, piv->second);
            }
            // Clear column t below the pivot and row t right of it.  Using the
            // smallest entry as pivot keeps the Euclidean descent short.
            bool clean = true;
            for (std::size_t r = t + 1; r < a.rows(); ++r) {
                if (a(r, t) == 0) continue;
                Int q = a(r, t) / a(t, t);
                row_op(r, t, -q);
                if (a(r, t) != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < a.cols(); ++c) {
                if (a(t, c) == 0) continue;
                Int q = a(t, c) / a(t, t);
                col_op(c, t, -q);
                if (a(t, c) != 0) clean = false;
            }
            if (clean) {
                // Divisibility pass: every remaining entry must be divisible
                // by the pivot; if not, fold that row in and redo.
                bool divides = true;
                for (std::size_t r = t + 1; r < a.rows() && divides; ++r)
                    for (std::size_t c = t + 1; c < a.cols() && divides; ++c)
                        if (a(r, c) % a(t, t) != 0) {
                            row_op(t, r, 1);
                            divides = false;
                        }
                if (divides) break;
            }
            piv = find_pivot(a, t);
            assert(piv);
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            if (with_transforms) res.u.negate_row(t);
        }
        res.divisors.push_back(a(t, t));
    }
    return res;
}

HermiteForm hermite_form(const IntMatrix& a) {
    // Work on a copy organized as a list of surviving rows.
    std::vector<std::vector<Int>> rows;
    rows.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::vector<Int> row(a.cols());
        bool nonzero = false;
        for (std::size_t c = 0; c < a.cols(); ++c) {
            row[c] = a(r, c);
            nonzero |= row[c] != 0;
        }
        if (nonzero) rows.push_back(std::move(row));
    }

    std::vector<std::vector<Int>> done;       // pivot rows, by increasing pivot col
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col = 0; col < a.cols() && !rows.empty(); ++col) {
        // Euclidean reduction of all rows with leading entry in this column.
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
            }
            if (best == rows.size()) break;  // column already clear
            bool others = false;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == best || rows[i][col] == 0) continue;
                others = true;
                Int q = rows[i][col] / rows[best][col];
                for (std::size_t c = col; c < a.cols(); ++c) rows[i][c] -= q * rows[best][c];
            }
            if (!others) {
                // rows[best] is the unique row hitting this column: it pivots.
                if (rows[best][col] < 0)
                    for (std::size_t c = col; c < a.cols(); ++c) rows[best][c] = -rows[best][c];
                done.push_back(std::move(rows[best]));
                pivot_cols.push_back(col);
                rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
                break;
            }
        }
        // Drop rows that became zero.
        std::erase_if(rows, [](const std::vector<Int>& r) {
            for (const Int& v : r) if (v != 0) return false;
            return true;
        });
    }

    // Reduce entries above pivots and in later pivot columns modulo the pivot.
    for (std::size_t i = done.size(); i-- > 0;) {
        for (std::size_t j = i + 1; j < done.size(); ++j) {
            std::size_t pc = pivot_cols[j];
            const Int& p = done[j][pc];
            Int q;
            // floor division so the residue lands in [0, p)
            Int v = done[i][pc];
            q = v / p;
            if (v % p < 0) q -= 1;
            if (q != 0)
                for (std::size_t c = pc; c < a.cols(); ++c) done[i][c] -= q * done[j][c];
        }
    }

    HermiteForm h;
    h.mat = IntMatrix(done.size(), a.cols());
    for (std::size_t r = 0; r < done.size(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) h.mat(r, c) = std::move(done[r][c]);
    h.pivot_cols = std::move(pivot_cols);
    return h;
}

Int determinant(IntMatrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
    std::size_t n = a.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0) ++r;
            if (r == n) return 0;
            a.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                assert(num % prev == 0);
                a(i, j) = num / prev;
            }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------

std::vector<Int> AbelianInvariants::as_list() const {
    std::vector<Int> out = torsion;
    out.insert(out.end(), static_cast<std::size_t>(free_rank), Int(0));
    return out;
}

AbelianInvariants make_invariants(long free_rank, std::vector<Int> cyclic_orders) {
    // Bucket prime powers, then rebuild the chain by aligning the largest
    // exponents of every prime into the last divisor.
    std::vector<std::pair<Int, std::vector<int>>> primes;  // prime -> exponents (desc)
    for (Int n : cyclic_orders) {
        assert(n > 0);
        for (Int p = 2; p * p <= n; ++p) {
            if (n % p != 0) continue;
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            auto it = std::find_if(primes.begin(), primes.end(),
                                   [&](const auto& pr) { return pr.first == p; });
            if (it == primes.end()) primes.push_back({p, {e}});
            else it->second.push_back(e);
        }
        if (n > 1) {
            auto it = std::find_if(primes.begin(), primes.end(),
                                   [&](const auto& pr) { return pr.first == n; });
            if (it == primes.end()) primes.push_back({n, {1}});
            else it->second.push_back(1);
        }
    }
    std::size_t chain_len = 0;
    for (auto& [p, exps] : primes) {
        std::sort(exps.begin(), exps.end(), std::greater<>());
        chain_len = std::max(chain_len, exps.size());
    }
    std::vector<Int> chain(chain_len, Int(1));
    for (const auto& [p, exps] : primes)
        for (std::size_t t = 0; t < exps.size(); ++t) {
            Int pw = 1;
            for (int e = 0; e < exps[t]; ++e) pw *= p;
            chain[chain_len - 1 - t] *= pw;
        }
    AbelianInvariants inv;
    inv.free_rank = free_rank;
    inv.torsion = std::move(chain);
    return inv;
}

AbelianInvariants direct_sum(const AbelianInvariants& a, const AbelianInvariants& b) {
    std::vector<Int> orders = a.torsion;
    orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
    return make_invariants(a.free_rank + b.free_rank, std::move(orders));
}

AbelianInvariants cokernel_invariants(const IntMatrix& a) {
    auto s = smith_normal_form(a);
    std::vector<Int> orders;
    for (const Int& d : s.divisors)
        if (d > 1) orders.push_back(d);
    return make_invariants(static_cast<long>(a.cols() - s.divisors.size()),
                           std::move(orders));
}

BitVec& BitVec::operator^=(const BitVec& o) {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

bool BitVec::any() const {
    for (std::uint64_t w : words_) if (w) return true;
    return false;
}

std::size_t BitVec::popcount() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t BitVec::lowest_set() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return size_;
}

void GF2Matrix::append_row(BitVec v) {
    assert(v.size() == cols_ || rows_.empty());
    if (rows_.empty()) cols_ = v.size();
    rows_.push_back(std::move(v));
}

std::size_t gf2_rank(GF2Matrix a) {
    GF2RowSpace sp(a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) sp.add(a.row(r));
    return sp.rank();
}

std::optional<BitVec> gf2_solve(GF2Matrix a, const BitVec& b) {
    assert(b.size() == a.rows());
    // Forward eliminate on [A | b] tracking pivot columns.
    std::size_t nr = a.rows(), nc = a.cols();
    std::vector<bool> rhs(nr);
    for (std::size_t i = 0; i < nr; ++i) rhs[i] = b.get(i);

    std::vector<std::size_t> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t sel = nr;
        for (std::size_t r = row; r < nr; ++r)
            if (a.get(r, col)) { sel = r; break; }
        if (sel == nr) continue;
        std::swap(a.row(row), a.row(sel));
        std::vector<bool>::swap(rhs[row], rhs[sel]);
        for (std::size_t r = 0; r < nr; ++r) {
            if (r != row && a.get(r, col)) {
                a.row(r) ^= a.row(row);
                rhs[r] = rhs[r] ^ rhs[row];
            }
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < nr; ++r)
        if (rhs[r]) return std::nullopt;  // 0 = 1: inconsistent

    BitVec x(nc);
    for (std::size_t r = 0; r < row; ++r)
        if (rhs[r]) x.set(pivot_col_of_row[r], true);
    return x;
}

std::vector<BitVec> gf2_nullspace(GF2Matrix a) {
    std::size_t nr = a.rows(), nc = a.cols();
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t sel = nr;
        for (std::size_t r = row; r < nr; ++r)
            if (a.get(r, col)) { sel = r; break; }
        if (sel == nr) continue;
        std::swap(a.row(row), a.row(sel));
        for (std::size_t r = 0; r < nr; ++r)
            if (r != row && a.get(r, col)) a.row(r) ^= a.row(row);
        pivot_col_of_row.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : pivot_col_of_row) is_pivot[c] = true;

    std::vector<BitVec> basis;
    for (std::size_t free_col = 0; free_col < nc; ++free_col) {
        if (is_pivot[free_col]) continue;
        BitVec v(nc);
        v.set(free_col, true);
        for (std::size_t r = 0; r < row; ++r)
            if (a.get(r, free_col)) v.set(pivot_col_of_row[r], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool GF2RowSpace::add(BitVec v) {
    assert(v.size() == cols_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (v.get(pivots_[i])) v ^= basis_[i];
    std::size_t p = v.lowest_set();
    if (p == cols_) return false;
    // Keep the basis reduced: clear column p in existing rows.
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].get(p)) basis_[i] ^= v;
    basis_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool GF2RowSpace::contains(BitVec v) const {
    assert(v.size() == cols_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (v.get(pivots_[i])) v ^= basis_[i];
    return !v.any();
}

}  // namespace coxlie
