#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "parq/family.hpp"
#include "parq/qpoly.hpp"

namespace parq {

struct StandardBasis {
    std::vector<Monomial> monomials; // by degree, then ascending lex
    bool complete = false;           // true when this is the full finite basis
};

// Default degree cap for a family containing all singletons: one past the
// largest possible standard-monomial degree sum_i (nu_{{i}}(i) - 1).
int default_degree_cap(const MonomialFamily& f);

// Monomials of degree <= cap outside the ideal.  cap < 0 selects the
// default cap, which requires every singleton to be present.
StandardBasis standard_basis(const MonomialFamily& f, int cap = -1);

// Degree counts (dims[k] = #basis monomials of total degree k) of a
// standard basis; trailing zeros trimmed.
std::vector<Int> degree_counts(const std::vector<Monomial>& monomials);

// Numerator N(q) of Hilb(S/I) = N(q)/(1-q)^n for a monotone family:
// 1 + sum over nonempty chains in Sigma of (-1)^k q^{deg lcm(chain)}.
// Throws validation_error when the family is not monotone.
QPolynomial hilbert_numerator(const MonomialFamily& f, long long max_chains = 1 << 20);

// Alternating chain-sum expression for dim(S/I); requires all singletons.
Int dimension_chain_formula(const MonomialFamily& f, long long max_chains = 1 << 20);

// lcm of a strictly increasing chain via the per-level product formula
// (exponent nu_{I_r}(i) for i entering at level r).  chain holds labels;
// throws validation_error unless the labels form a strictly increasing
// chain in the family.
Monomial chain_lcm(const MonomialFamily& f, const std::vector<std::uint32_t>& chain);

// Enumerates every nonempty strictly increasing chain of generator indices
// of a finite strict order, in depth-first lexicographic order.  `less`
// must be transitive.  Guarded by max_chains.
void for_each_chain(int count, const std::function<bool(int, int)>& less,
                    const std::function<void(const std::vector<int>&)>& fn,
                    long long max_chains = 1 << 20);

} // namespace parq
