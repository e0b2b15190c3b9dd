#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parq/graph.hpp"
#include "parq/monomial.hpp"

namespace parq {

// One generator of a subset-labelled family: a nonempty subset I of {1..n}
// (as a bitmask) together with its monomial m_I.
struct FamilyEntry {
    std::uint32_t label = 0;
    Monomial m;
};

// Monomial family indexed by a collection Sigma of nonempty subsets of
// {1..n}, ordered by inclusion.  Entries are kept sorted by (|I|, mask), so
// indices enumerate Sigma bottom-up.
class MonomialFamily {
  public:
    MonomialFamily(int n, std::vector<FamilyEntry> entries);

    int n() const { return n_; }
    int size() const { return static_cast<int>(entries_.size()); }
    const std::vector<FamilyEntry>& entries() const { return entries_; }
    const Monomial& gen(int idx) const { return entries_[static_cast<size_t>(idx)].m; }
    std::uint32_t label(int idx) const { return entries_[static_cast<size_t>(idx)].label; }
    int index_of(std::uint32_t label) const; // -1 when absent

    // Exponent nu_I(i) of x_i in m_I; i is 1-based.
    int nu(std::uint32_t label, int i) const;
    bool has_all_singletons() const;
    // Strict containment of labels = the order on generators.
    bool less(int u, int v) const;

  private:
    int n_;
    std::vector<FamilyEntry> entries_;
};

// m_I = prod_{i in I} x_i^{d_I(i)} over ALL nonempty subsets, where d_I(i)
// counts edges from i to vertices outside I (the root included).
MonomialFamily graph_family(const Digraph& g, int max_n = 16);

// m_I = (prod_{i in I} x_i)^{rho_r} for |I| = r; rho must be weakly
// decreasing and non-negative.
MonomialFamily rho_family(const std::vector<int>& rho, int max_n = 16);

// m_I = (prod_{i in I} x_i)^{l + k(n-r)}.
MonomialFamily kl_family(int n, int k, int l, int max_n = 16);

// m_I = (prod_{i in I} x_i)^{n-r+1} * x_{min I}.
MonomialFamily hat_family(int n, int max_n = 16);

// Monomial generators labelled by an arbitrary finite poset, given by its
// Hasse covers.  Used where inclusion order is not the right structure.
class OrderIdealFamily {
  public:
    OrderIdealFamily(int nvars, std::vector<Monomial> gens,
                     const std::vector<std::pair<int, int>>& covers);

    int nvars() const { return nvars_; }
    int size() const { return static_cast<int>(gens_.size()); }
    const Monomial& gen(int idx) const { return gens_[static_cast<size_t>(idx)]; }
    const std::vector<Monomial>& gens() const { return gens_; }
    bool less(int u, int v) const { return less_[static_cast<size_t>(u)][static_cast<size_t>(v)] != 0; }

  private:
    int nvars_;
    std::vector<Monomial> gens_;
    std::vector<std::vector<char>> less_; // strict order, transitively closed
};

enum class Verdict { pass, fail, not_applicable };

struct ConditionWitness {
    std::string condition; // "MM2", "OM", ...
    std::string detail;    // human-readable description of the failing instance
};

// Outcome of the structural checks on a family.  MM1-3 make the family
// monotone, SM1-2 strictly monotone, OM order-monomial, GM generic.
struct ConditionReport {
    Verdict mm1 = Verdict::not_applicable;
    Verdict mm2 = Verdict::not_applicable;
    Verdict mm3 = Verdict::not_applicable;
    Verdict sm1 = Verdict::not_applicable;
    Verdict sm2 = Verdict::not_applicable;
    Verdict om = Verdict::not_applicable;
    Verdict gm = Verdict::not_applicable;
    std::vector<ConditionWitness> witnesses;

    bool monotone() const {
        return mm1 == Verdict::pass && mm2 == Verdict::pass && mm3 == Verdict::pass;
    }
    bool strictly_monotone() const {
        return monotone() && sm1 == Verdict::pass && sm2 == Verdict::pass;
    }
};

ConditionReport check_conditions(const MonomialFamily& f);
// For poset-labelled generators only OM, SM1 and GM are meaningful.
ConditionReport check_conditions(const OrderIdealFamily& f);

// m strictly divides m': it divides m' and the quotient keeps every
// variable of m' alive.
bool strictly_divides(const Monomial& m, const Monomial& target);

} // namespace parq
