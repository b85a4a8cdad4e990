#pragma once

#include <optional>
#include <vector>

#include "barhom/checked.hpp"

namespace barhom {

/// Dense exact integer matrix with checked arithmetic.
class IntMatrix {
public:
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
        data_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0);
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<i64>>& rows) {
        const int r = static_cast<int>(rows.size());
        const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
                throw Error("ragged matrix rows");
            for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    i64& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    i64 at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
        IntMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const i64 x = at(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r.at(i, j) = checked::add(r.at(i, j), checked::mul(x, o.at(k, j)));
            }
        return r;
    }

    /// Columns [first, first+count) as a new matrix.
    IntMatrix columns(int first, int count) const {
        IntMatrix r(rows_, count);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < count; ++j) r.at(i, j) = at(i, first + j);
        return r;
    }

    /// Rows [0, count) as a new matrix.
    IntMatrix top_rows(int count) const {
        IntMatrix r(count, cols_);
        for (int i = 0; i < count; ++i)
            for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        return r;
    }

    /// Horizontal concatenation [this | o].
    IntMatrix hcat(const IntMatrix& o) const {
        if (rows_ != o.rows_) throw Error("hcat row mismatch");
        IntMatrix r(rows_, cols_ + o.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
        }
        return r;
    }

private:
    int rows_, cols_;
    std::vector<i64> data_;
};

/// Smith normal form S = U A V with U, V unimodular and the diagonal of S a
/// divisibility chain d_1 | d_2 | ... (nonnegative). Pivoting is
/// deterministic: smallest absolute nonzero entry, ties broken by row-major
/// position.
struct SmithResult {
    IntMatrix s;
    std::optional<IntMatrix> u; // rows x rows
    std::optional<IntMatrix> v; // cols x cols
    std::vector<i64> diagonal;  // nonzero invariant factors, in order
    int rank() const { return static_cast<int>(diagonal.size()); }
};

inline SmithResult smith_normal_form(IntMatrix a, bool want_u = false, bool want_v = false) {
    const int rows = a.rows(), cols = a.cols();
    IntMatrix u = want_u ? IntMatrix::identity(rows) : IntMatrix(0, 0);
    IntMatrix v = want_v ? IntMatrix::identity(cols) : IntMatrix(0, 0);

    auto swap_rows = [&](int r1, int r2) {
        if (r1 == r2) return;
        for (int j = 0; j < cols; ++j) std::swap(a.at(r1, j), a.at(r2, j));
        if (want_u)
            for (int j = 0; j < rows; ++j) std::swap(u.at(r1, j), u.at(r2, j));
    };
    auto swap_cols = [&](int c1, int c2) {
        if (c1 == c2) return;
        for (int i = 0; i < rows; ++i) std::swap(a.at(i, c1), a.at(i, c2));
        if (want_v)
            for (int i = 0; i < cols; ++i) std::swap(v.at(i, c1), v.at(i, c2));
    };
    // row r1 -= q * row r2
    auto row_sub = [&](int r1, int r2, i64 q) {
        if (q == 0) return;
        for (int j = 0; j < cols; ++j)
            a.at(r1, j) = checked::sub(a.at(r1, j), checked::mul(q, a.at(r2, j)));
        if (want_u)
            for (int j = 0; j < rows; ++j)
                u.at(r1, j) = checked::sub(u.at(r1, j), checked::mul(q, u.at(r2, j)));
    };
    auto col_sub = [&](int c1, int c2, i64 q) {
        if (q == 0) return;
        for (int i = 0; i < rows; ++i)
            a.at(i, c1) = checked::sub(a.at(i, c1), checked::mul(q, a.at(i, c2)));
        if (want_v)
            for (int i = 0; i < cols; ++i)
                v.at(i, c1) = checked::sub(v.at(i, c1), checked::mul(q, v.at(i, c2)));
    };
    auto negate_row = [&](int r) {
        for (int j = 0; j < cols; ++j) a.at(r, j) = checked::neg(a.at(r, j));
        if (want_u)
            for (int j = 0; j < rows; ++j) u.at(r, j) = checked::neg(u.at(r, j));
    };

    const int steps = std::min(rows, cols);
    int t = 0;
    for (; t < steps; ++t) {
        // deterministic pivot: smallest |entry| != 0, ties by (row, col)
        int pr = -1, pc = -1;
        i64 best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                const i64 x = a.at(i, j);
                if (x == 0) continue;
                const i64 ax = x < 0 ? checked::neg(x) : x;
                if (pr < 0 || ax < best) {
                    best = ax;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break; // submatrix is zero
        swap_rows(t, pr);
        swap_cols(t, pc);

        while (true) {
            bool clean = true;
            for (int i = t + 1; i < rows; ++i) {
                const i64 x = a.at(i, t);
                if (x == 0) continue;
                const i64 q = x / a.at(t, t);
                row_sub(i, t, q);
                if (a.at(i, t) != 0) {
                    swap_rows(t, i); // remainder is strictly smaller, re-pivot
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                const i64 x = a.at(t, j);
                if (x == 0) continue;
                const i64 q = x / a.at(t, t);
                col_sub(j, t, q);
                if (a.at(t, j) != 0) {
                    swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // enforce divisibility of the remaining submatrix by the pivot
            int br = -1, bc = -1;
            for (int i = t + 1; i < rows && br < 0; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        br = i;
                        bc = j;
                        break;
                    }
            if (br < 0) break;
            row_sub(t, br, -1); // add offending row, then restart reduction
            (void)bc;
        }
        if (a.at(t, t) < 0) negate_row(t);
    }

    SmithResult res{std::move(a), std::nullopt, std::nullopt, {}};
    for (int i = 0; i < t; ++i) res.diagonal.push_back(res.s.at(i, i));
    if (want_u) res.u = std::move(u);
    if (want_v) res.v = std::move(v);
    return res;
}

/// Basis of the integer kernel of A, as matrix columns.
inline IntMatrix kernel_basis(const IntMatrix& a) {
    SmithResult snf = smith_normal_form(a, false, true);
    const int r = snf.rank();
    return snf.v->columns(r, a.cols() - r);
}

} // namespace barhom
