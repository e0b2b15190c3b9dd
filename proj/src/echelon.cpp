#include "parq/echelon.hpp"

#include <algorithm>
#include <utility>

#include "parq/errors.hpp"

namespace parq {

namespace {

// Divides a row by the gcd of its entries and makes the leading entry
// positive.  No-op on the zero row.
void normalize_content(std::vector<Int>& row, int lead) {
    if (lead < 0) return;
    Int g = 0;
    for (const Int& v : row) {
        if (v == 0) continue;
        g = gcd(g, v);
        if (g == 1) break;
    }
    if (row[lead] < 0) g = -g;
    if (g != 0 && g != 1) {
        for (Int& v : row) v /= g;
    }
}

int leading_column(const std::vector<Int>& row, int from) {
    for (int c = from; c < static_cast<int>(row.size()); ++c) {
        if (row[c] != 0) return c;
    }
    return -1;
}

} // namespace

RowEchelon::RowEchelon(int cols) : cols_(cols), pivot_of_col_(cols, -1) {
    if (cols < 0) throw dimension_error("row echelon: negative column count");
}

bool RowEchelon::insert(std::vector<Int> row) {
    if (static_cast<int>(row.size()) != cols_) {
        throw dimension_error("row echelon: row length does not match column count");
    }
    int lead = leading_column(row, 0);
    while (lead >= 0) {
        int pr = pivot_of_col_[lead];
        if (pr < 0) break;
        const std::vector<Int>& pivot = rows_[pr];
        const Int g = gcd(pivot[lead], row[lead]);
        const Int row_scale = pivot[lead] / g;
        const Int piv_scale = row[lead] / g;
        for (int c = lead; c < cols_; ++c) {
            row[c] = row[c] * row_scale - pivot[c] * piv_scale;
        }
        lead = leading_column(row, lead + 1);
        normalize_content(row, lead);
    }
    if (lead < 0) return false;
    normalize_content(row, lead);
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), lead,
                                [&](const std::vector<Int>& r, int l) {
                                    return leading_column(r, 0) < l;
                                });
    const int index = static_cast<int>(pos - rows_.begin());
    rows_.insert(pos, std::move(row));
    pivot_of_col_[lead] = index;
    for (int c = lead + 1; c < cols_; ++c) {
        if (pivot_of_col_[c] >= 0) ++pivot_of_col_[c];
    }
    return true;
}

} // namespace parq
