#include "parq/matrix.hpp"

#include <utility>

#include "parq/errors.hpp"

namespace parq {

BigIntMatrix::BigIntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw dimension_error("matrix dimensions must be >= 0");
    a_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Int(0));
}

BigIntMatrix BigIntMatrix::identity(int n) {
    BigIntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

BigIntMatrix BigIntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    BigIntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            throw dimension_error("ragged row list");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
}

BigIntMatrix BigIntMatrix::transpose() const {
    BigIntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

BigIntMatrix BigIntMatrix::submatrix(const std::vector<int>& rows,
                                     const std::vector<int>& cols) const {
    BigIntMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] < 0 || rows[i] >= rows_) throw dimension_error("row index out of range");
        for (size_t j = 0; j < cols.size(); ++j) {
            if (cols[j] < 0 || cols[j] >= cols_) throw dimension_error("col index out of range");
            s.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
        }
    }
    return s;
}

namespace {

// Shared fraction-free elimination.  Eliminates in place, choosing as pivot
// the first row with a nonzero entry in the current column (deterministic).
// Returns the rank; when `need_det` is set and a column has no pivot the
// caller knows det = 0.
struct Elimination {
    int rank = 0;
    int sign = 1;
    Int last_pivot = 1;
};

Elimination fraction_free_eliminate(BigIntMatrix& m) {
    Elimination e;
    Int prev = 1;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row) {
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
            e.sign = -e.sign;
        }
        const Int piv = m.at(row, col);
        for (int i = row + 1; i < m.rows(); ++i) {
            const Int head = m.at(i, col);
            for (int j = col + 1; j < m.cols(); ++j)
                m.at(i, j) = (m.at(i, j) * piv - head * m.at(row, j)) / prev;
            m.at(i, col) = 0;
        }
        prev = piv;
        e.last_pivot = piv;
        ++row;
    }
    e.rank = row;
    return e;
}

} // namespace

Int determinant(const BigIntMatrix& m) {
    if (m.rows() != m.cols()) throw dimension_error("determinant needs a square matrix");
    if (m.rows() == 0) return 1;
    BigIntMatrix w = m;
    Elimination e = fraction_free_eliminate(w);
    if (e.rank < m.rows()) return 0;
    return e.sign > 0 ? e.last_pivot : Int(-e.last_pivot);
}

int exact_rank(const BigIntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    BigIntMatrix w = m;
    return fraction_free_eliminate(w).rank;
}

std::vector<Int> smith_normal_form(const BigIntMatrix& m) {
    if (m.rows() != m.cols()) throw dimension_error("smith_normal_form needs a square matrix");
    const int n = m.rows();
    if (determinant(m) == 0) throw singularity_error("smith_normal_form needs a nonsingular matrix");
    BigIntMatrix w = m;

    auto swap_rows = [&](int a, int b) {
        for (int j = 0; j < n; ++j) std::swap(w.at(a, j), w.at(b, j));
    };
    auto swap_cols = [&](int a, int b) {
        for (int i = 0; i < n; ++i) std::swap(w.at(i, a), w.at(i, b));
    };

    for (int t = 0; t < n; ++t) {
        // Nonsingularity guarantees a nonzero entry in the trailing block.
        [&] {
            for (int i = t; i < n; ++i)
                for (int j = t; j < n; ++j)
                    if (w.at(i, j) != 0) {
                        if (i != t) swap_rows(i, t);
                        if (j != t) swap_cols(j, t);
                        return;
                    }
            throw invariant_error("smith_normal_form: trailing block vanished");
        }();

        for (bool dirty = true; dirty;) {
            dirty = false;
            // Euclidean reduction down the pivot column...
            for (int i = t + 1; i < n; ++i) {
                while (w.at(i, t) != 0) {
                    Int q = w.at(i, t) / w.at(t, t);
                    for (int j = t; j < n; ++j) w.at(i, j) -= q * w.at(t, j);
                    if (w.at(i, t) != 0) swap_rows(i, t);
                }
            }
            // ...and across the pivot row (may refill the column).
            for (int j = t + 1; j < n; ++j) {
                while (w.at(t, j) != 0) {
                    Int q = w.at(t, j) / w.at(t, t);
                    for (int i = t; i < n; ++i) w.at(i, j) -= q * w.at(i, t);
                    if (w.at(t, j) != 0) {
                        swap_cols(j, t);
                        dirty = true;
                    }
                }
            }
            if (dirty) continue;
            // Enforce divisibility of the trailing block by the pivot.
            for (int i = t + 1; i < n && !dirty; ++i)
                for (int j = t + 1; j < n && !dirty; ++j)
                    if (w.at(i, j) % w.at(t, t) != 0) {
                        for (int k = t; k < n; ++k) w.at(t, k) += w.at(i, k);
                        dirty = true;
                    }
        }
    }

    std::vector<Int> d(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) d[static_cast<size_t>(t)] = abs(w.at(t, t));
    return d;
}

std::vector<Rat> solve_rational(const BigIntMatrix& a, const std::vector<Int>& b) {
    if (a.rows() != a.cols()) throw dimension_error("solve_rational needs a square matrix");
    const int n = a.rows();
    if (static_cast<int>(b.size()) != n) throw dimension_error("right-hand side length mismatch");

    std::vector<std::vector<Rat>> w(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n) + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(a.at(i, j));
        w[static_cast<size_t>(i)][static_cast<size_t>(n)] = Rat(b[static_cast<size_t>(i)]);
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (w[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw singularity_error("solve_rational: singular matrix");
        std::swap(w[static_cast<size_t>(col)], w[static_cast<size_t>(pivot)]);
        const Rat piv = w[static_cast<size_t>(col)][static_cast<size_t>(col)];
        for (int i = 0; i < n; ++i) {
            if (i == col || w[static_cast<size_t>(i)][static_cast<size_t>(col)] == 0) continue;
            Rat f = w[static_cast<size_t>(i)][static_cast<size_t>(col)] / piv;
            for (int j = col; j <= n; ++j)
                w[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * w[static_cast<size_t>(col)][static_cast<size_t>(j)];
        }
    }
    std::vector<Rat> x(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        x[static_cast<size_t>(i)] =
            w[static_cast<size_t>(i)][static_cast<size_t>(n)] / w[static_cast<size_t>(i)][static_cast<size_t>(i)];
    return x;
}

} // namespace parq
