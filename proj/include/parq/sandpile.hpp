#pragma once

#include <vector>

#include "parq/bigint.hpp"
#include "parq/graph.hpp"
#include "parq/matrix.hpp"

namespace parq {

// Validated toppling matrix: off-diagonal entries <= 0 and every principal
// minor strictly positive (checked exhaustively at construction).
class TopplingMatrix {
  public:
    static TopplingMatrix validate(const BigIntMatrix& delta, int max_n = 12);

    int n() const { return d_.rows(); }
    const BigIntMatrix& delta() const { return d_; }
    long long diag(int i) const { return diag_[static_cast<size_t>(i)]; }
    long long entry(int i, int j) const {
        return entries_[static_cast<size_t>(i) * static_cast<size_t>(n()) + static_cast<size_t>(j)];
    }
    bool row_sums_nonneg() const { return row_sums_nonneg_; }
    bool col_sums_nonneg() const { return col_sums_nonneg_; }

  private:
    explicit TopplingMatrix(BigIntMatrix d);
    BigIntMatrix d_;
    std::vector<long long> entries_;
    std::vector<long long> diag_;
    bool row_sums_nonneg_ = false;
    bool col_sums_nonneg_ = false;
};

// Particle counts per site, entries >= 0.
using Config = std::vector<long long>;

bool is_stable(const TopplingMatrix& d, const Config& u);

struct StabilizeResult {
    Config stable;
    std::vector<long long> topplings; // per-site toppling counts
};

// Topples the lowest critical site until stable.  Termination is certified
// by the matrix validation; the step guard comes from the h-vector solving
// delta * h = (1..1), whose inner product with u drops by one per toppling.
// Tripping the guard means validation was wrong and throws invariant_error.
StabilizeResult stabilize(const TopplingMatrix& d, Config u, long long max_topplings = -1);

// Adds one particle at `site` to a stable configuration and stabilizes.
Config avalanche(const TopplingMatrix& d, const Config& u, int site);

// No nonempty site subset I is forbidden: some j in I has
// u_j >= sum_{i in I \ {j}} (-delta_{ij}).
bool is_allowed(const TopplingMatrix& d, const Config& u);

// The unique terminal strongly connected component of the avalanche
// digraph on all stable configurations, sorted ascending.  Checks |result|
// = det(delta) and uniqueness of the terminal component; violations throw
// invariant_error.  State count prod delta_ii is guarded.
std::vector<Config> recurrent_class(const TopplingMatrix& d, long long max_states = 1 << 20);

// u_i -> delta_ii - 1 - u_i; requires u stable.
Config dual_config(const TopplingMatrix& d, const Config& u);

// Invariant factors of the sandpile group Z^n / (rows of delta).
std::vector<Int> sandpile_group_invariants(const TopplingMatrix& d);

// With delta the transposed truncated Laplacian of g: do the duals of the
// recurrent configurations coincide with the G-parking functions?
bool parking_bijection_check(const Digraph& g, long long max_states = 1 << 20);

} // namespace parq
