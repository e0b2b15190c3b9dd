#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "parq/family.hpp"
#include "parq/qpoly.hpp"

namespace parq {

// A graded free resolution 0 -> C_max -> ... -> C_1 -> S.  terms[k-1]
// describes C_k as (internal degree d, rank) pairs, sorted by d, ranks
// positive; the final S term is implicit.
struct GradedResolution {
    std::vector<std::vector<std::pair<int, Int>>> terms;
    bool minimal = false;

    // "0 -> S(-6)^6 -> S(-5)^12 -> S(-3)^4 (+) S(-4)^3 -> S" with the
    // arrows/plus rendered as the usual unicode symbols; highest
    // homological degree first, ascending d inside a term, "^r" omitted
    // when r = 1.
    std::string display() const;

    // Alternating sum 1 - sum_{(d,r) in C_1} r q^d + ... .
    QPolynomial euler_numerator() const;

    // betti[k-1] = total rank of C_k.
    std::vector<Int> betti_totals() const;
};

// Finite simplicial complex on integer vertex labels.  Faces are nonempty,
// stored as strictly increasing vertex lists; downward closure (within
// nonempty subsets) is validated.
class SimplicialComplex {
  public:
    SimplicialComplex(std::vector<int> vertices, std::vector<std::vector<int>> faces);

    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<std::vector<int>>& faces() const { return faces_; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    // counts[k] = number of faces with k+1 vertices.
    std::vector<int> face_counts_by_dim() const;
    // Path-connectivity through 1-dimensional faces; complexes with at
    // most one vertex count as connected.
    bool connected() const;

  private:
    std::vector<int> vertices_;
    std::vector<std::vector<int>> faces_; // sorted by (size, lex)
};

// Free resolution read off the order complex: C_k has one generator of
// degree deg(lcm) per strictly increasing k-chain.  Requires the
// upper-bound condition on the family; minimality is decided by lcm
// collisions between chains and their one-element-deleted subchains.
GradedResolution order_complex_resolution(const MonomialFamily& f,
                                          long long max_chains = 1 << 20);
GradedResolution order_complex_resolution(const OrderIdealFamily& f,
                                          long long max_chains = 1 << 20);

struct BettiTable {
    // (homological degree k, internal degree d) -> number of k-chains.
    std::map<std::pair<int, int>, Int> counts;
    // True when the chain counts are honest Betti numbers (no lcm
    // collisions, i.e. the resolution is minimal).
    bool minimal = false;

    Int total(int k) const;
};

// Graded chain counts beta_{k,d}; minimal exactly when the family's order
// resolution is.
BettiTable betti_numbers(const MonomialFamily& f, long long max_chains = 1 << 20);
BettiTable betti_numbers(const OrderIdealFamily& f, long long max_chains = 1 << 20);

// Subsets U of the generators whose lcm m_U differs from m_V for every
// other subset V, as a simplicial complex on generator indices.  The
// generators must be minimal (no divisibility among them).
SimplicialComplex scarf_complex(const std::vector<Monomial>& gens, int max_generators = 20);

// Scarf complex of the family's minimalized generators (redundant entries
// dropped first), with faces labelled by the original entry indices.
SimplicialComplex scarf_complex(const MonomialFamily& f, int max_generators = 20);

// Whether the order complex (all chains, on all entries) coincides with
// the Scarf complex of the minimalized generators, as labelled face sets.
bool compare_order_scarf(const MonomialFamily& f, long long max_chains = 1 << 20);
bool compare_order_scarf(const OrderIdealFamily& f, long long max_chains = 1 << 20);

// Checks sum_k (-1)^k Hilb C_k against the chain-sum numerator of the
// family.  A positive cap additionally expands numerator/(1-q)^n that far
// and compares against the standard-basis degree counts.
bool euler_check(const GradedResolution& res, const MonomialFamily& f, int cap = 0);

// Reduced rational homology ranks of the subcomplex of chains whose lcm
// divides m: ranks[0] is the rank in degree -1 (1 exactly when the
// subcomplex is empty), ranks[i] the rank in dimension i-1.
std::vector<Int> subcomplex_homology(const MonomialFamily& f, const Monomial& m,
                                     long long max_faces = 1 << 16);

} // namespace parq
