#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "parq/bigint.hpp"
#include "parq/family.hpp"
#include "parq/graph.hpp"
#include "parq/monomial.hpp"

namespace parq {

// A homogeneous polynomial with rational coefficients: every stored term
// has the same total degree.  The zero polynomial carries a nominal degree.
class HomogeneousPolynomial {
  public:
    HomogeneousPolynomial(int nvars, int degree);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

    // Adds c * x^exponents (same total degree enforced).
    void add_term(const std::vector<int>& exponents, const Rat& c);

    // Multiplies by the monomial x^shift in place.
    HomogeneousPolynomial shifted(const std::vector<int>& shift) const;

    // Bitmask over variables that appear with a positive exponent
    // (bit i set means x_{i+1} appears).
    std::uint32_t support_mask() const;

    // Dense coefficient row over the given column order (each column is an
    // exponent vector of the polynomial's degree), with denominators
    // cleared: the row is the polynomial times the lcm of denominators.
    std::vector<Int> coefficient_row(
        const std::map<std::vector<int>, int>& column_of) const;

    std::string str() const;

    // (c_1 x_1 + ... + c_n x_n)^power expanded by the multinomial theorem.
    static HomogeneousPolynomial linear_power(int nvars,
                                              const std::vector<Rat>& coeffs,
                                              int power);

    // (sum of the variables selected by mask)^power.
    static HomogeneousPolynomial power_of_sum(int nvars, std::uint32_t mask,
                                              int power);

    static HomogeneousPolynomial from_monomial(int nvars, const Monomial& m);

  private:
    int nvars_;
    int degree_;
    std::map<std::vector<int>, Rat> terms_;
};

// Power polynomials aligned entry-by-entry with the corresponding monomial
// family (same subset order: by size, then by mask value).

// p_I = (sum_{i in I} x_i)^{D_I} where D_I counts edges leaving I.
std::vector<HomogeneousPolynomial> power_generators(const Digraph& g);

// p_I = (sum_{i in I} x_i)^{r * rho_r} for r = |I|.
std::vector<HomogeneousPolynomial> rho_power_generators(
    int nvars, const std::vector<int>& rho);

std::vector<HomogeneousPolynomial> kl_power_generators(int nvars, int k, int l);

// p-hat_I = (sum_{i in I} x_i)^{D_I + 1}.
std::vector<HomogeneousPolynomial> hat_power_generators(const Digraph& g);

// Graded dimensions of S / <gens> for homogeneous gens: per degree k the
// rank of the row space {x^a * g : deg = k} is subtracted from the monomial
// count.  Variable swaps that permute the generator set split the
// computation into independent character blocks (still exact integer
// elimination).  Stops early once a degree has dimension zero, which forces
// all later degrees to zero as well; the returned vector always has cap+1
// entries.
std::vector<Int> quotient_graded_dims(int nvars,
                                      const std::vector<HomogeneousPolynomial>& gens,
                                      int cap,
                                      int max_monomials_per_degree = 20000);

// Whether S = span(monomials not divisible by m) (+) <p> holds degree by
// degree inside the variables selected by mask, checked up to `cap`
// (default 2*deg(m) + #selected variables when cap < 0).
bool is_i_deformation(int nvars, std::uint32_t mask, const Monomial& m,
                      const HomogeneousPolynomial& p, int cap = -1);

struct SpanReport {
    std::vector<Int> hilb_a; // graded dims of the monomial quotient
    std::vector<Int> hilb_b; // graded dims of the power quotient
    bool equal = false;
    int first_gap_degree = -1; // smallest degree where they differ, or -1
};

// Compares the monomial quotient's Hilbert function against the power
// quotient's, after checking every generator really is a deformation of its
// monomial.  Throws invariant_error if the power side ever exceeds the
// monomial side (impossible for genuine deformations).
SpanReport verify_span(const MonomialFamily& f,
                       const std::vector<HomogeneousPolynomial>& gens,
                       int cap = -1);

// Graded dimensions of the span of the products
//   alpha_H = prod_{edges {u,v} in H, u<v} (y_u - y_v)   (with y_0 = 0)
// over slim subgraphs H (complement connected on all vertices), graded by
// edge count.
std::vector<Int> cg_graded_dims(const EdgeList& g,
                                int max_subgraph_edges = 20);

struct ForestCheckReport {
    std::vector<Int> forest_counts; // #forests with activity |G|-|F|-k
    std::vector<Int> quotient_dims; // graded dims of the hat power quotient
    bool equal = false;
};

// Forest-activity statistic versus the hat power ideal's quotient dims.
ForestCheckReport forest_check(const EdgeList& g);

} // namespace parq
