#pragma once

#include <vector>

#include "parq/bigint.hpp"

namespace parq {

// Dense matrix of arbitrary-precision integers, row-major.
class BigIntMatrix {
  public:
    BigIntMatrix() : rows_(0), cols_(0) {}
    BigIntMatrix(int rows, int cols);
    static BigIntMatrix identity(int n);
    static BigIntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    BigIntMatrix transpose() const;
    // Rows/cols are 0-based index lists; duplicates are not checked.
    BigIntMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

    bool operator==(const BigIntMatrix& o) const = default;

  private:
    int rows_, cols_;
    std::vector<Int> a_;
};

// Fraction-free (Bareiss) determinant with first-nonzero pivot search in
// column order.  Throws dimension_error for non-square input.
Int determinant(const BigIntMatrix& m);

// Rank over the rationals, computed exactly by fraction-free elimination
// with column skipping.
int exact_rank(const BigIntMatrix& m);

// Invariant factors d_1 | d_2 | ... | d_n (all positive) of a square
// nonsingular integer matrix.  Throws singularity_error when det = 0 and
// dimension_error for non-square input.
std::vector<Int> smith_normal_form(const BigIntMatrix& m);

// Exact solution x of A x = b for square nonsingular A.
std::vector<Rat> solve_rational(const BigIntMatrix& a, const std::vector<Int>& b);

} // namespace parq
