#pragma once

#include <vector>

#include "parq/graph.hpp"
#include "parq/qpoly.hpp"

namespace parq {

// b is G-parking iff every nonempty I of non-root vertices has some i in I
// with b_i < d_I(i), where d_I(i) counts edges from i to the outside of I.
bool is_g_parking(const Digraph& g, const std::vector<int>& b);

// All G-parking functions in ascending lexicographic order.  The search box
// is prod_i [0, d_{{i}}(i)); its volume is guarded.
std::vector<std::vector<int>> enumerate_g_parking(const Digraph& g, long long max_box = 5'000'000);

// b is rho-parking iff its increasing rearrangement c satisfies
// c_i < rho_{n+1-i}; rho must be weakly decreasing and non-negative.
bool is_rho_parking(const std::vector<int>& rho, const std::vector<int>& b);
std::vector<std::vector<int>> enumerate_rho_parking(const std::vector<int>& rho,
                                                    long long max_box = 5'000'000);

// Usual parking functions of size n (rho = (n, n-1, ..., 1)).
std::vector<std::vector<int>> enumerate_parking_functions(int n);

// Sequences b with x^b outside the ideal generated by
// (x_{i_1}...x_{i_r})^{n-r+1} x_{i_1}; lexicographic order.
std::vector<std::vector<int>> enumerate_almost_parking(int n, int max_n = 6);

// Number of permutations of 1..n whose consecutive comparisons follow the
// parities of rho: sigma_i < sigma_{i+1} exactly when rho_i is even, and
// finally sigma_n compared with 0 under the parity of rho_n.
Int descent_pattern_count(const std::vector<int>& rho, int max_n = 9);

// Hilbert series of the rho quotient as the subtraction-free sum over usual
// parking functions a of prod_i q^{rho_{n-a_i+1}} [rho_{n-a_i} - rho_{n-a_i+1}].
QPolynomial rho_hilbert_series(const std::vector<int>& rho, int max_n = 7);

} // namespace parq
