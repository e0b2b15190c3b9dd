#pragma once

#include <vector>

#include "parq/bigint.hpp"

namespace parq {

// Stirling number of the second kind S(n,k): partitions of an n-set into k
// nonempty blocks.  k > n gives 0; S(0,0) = 1.
Int stirling2(int n, int k);

Int binomial(int n, int k);

// n! / (parts_1! * ... * parts_m!) with n = sum of parts.
Int multinomial(const std::vector<int>& parts);

Int factorial(int n);

// Number of exponent vectors of length nvars summing to degree.
Int count_monomials_of_degree(int nvars, int degree);

// All exponent vectors of length nvars summing to degree, in ascending
// lexicographic order.  This order fixes the column order of every graded
// coefficient matrix in the library.
std::vector<std::vector<int>> monomials_of_degree(int nvars, int degree);

} // namespace parq
