#pragma once

#include <vector>

#include "parq/bigint.hpp"

namespace parq {

// Incremental exact row-echelon basis of a rational row space, stored as
// integer rows with content (gcd of entries) divided out.  Exact over Q:
// elimination is fraction-free with a gcd-scaled combination step, so no
// rounding ever occurs.  Designed for graded coefficient matrices where
// rows arrive one by one and the rank is read off repeatedly.
class RowEchelon {
  public:
    explicit RowEchelon(int cols);

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Reduces `row` against the basis; a surviving remainder joins the
    // basis.  Returns true when the rank grew.
    bool insert(std::vector<Int> row);

    // Basis rows sorted by leading column (each content-free).
    const std::vector<std::vector<Int>>& rows() const { return rows_; }

  private:
    int cols_;
    std::vector<std::vector<Int>> rows_; // kept sorted by leading column
    std::vector<int> pivot_of_col_;     // column -> basis row index, or -1
};

} // namespace parq
