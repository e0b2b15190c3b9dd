#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "parq/combinat.hpp"
#include "parq/deformation.hpp"
#include "parq/errors.hpp"
#include "parq/family.hpp"
#include "parq/graph.hpp"
#include "parq/ideal.hpp"
#include "parq/matrix.hpp"
#include "parq/parking.hpp"

using namespace parq;

namespace {

EdgeList example_graph() {
    return EdgeList(3, {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

EdgeList random_multigraph(std::mt19937_64& rng, int n, int extra_edges) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= n; ++v) edges.emplace_back(static_cast<int>(rng() % v), v);
    for (int e = 0; e < extra_edges; ++e) {
        const int u = static_cast<int>(rng() % (n + 1));
        int v = static_cast<int>(rng() % (n + 1));
        if (u == v) v = (v + 1) % (n + 1);
        edges.emplace_back(u, v);
    }
    return EdgeList(n, std::move(edges));
}

Int total(const std::vector<Int>& dims) {
    Int t = 0;
    for (const Int& d : dims) t += d;
    return t;
}

// Independent full-matrix computation of the quotient's graded dimensions:
// one dense row per generator multiple, rank by fraction-free elimination.
std::vector<Int> dense_quotient_dims(int nvars,
                                     const std::vector<HomogeneousPolynomial>& gens,
                                     int cap) {
    std::vector<Int> dims;
    for (int k = 0; k <= cap; ++k) {
        const std::vector<std::vector<int>> cols = monomials_of_degree(nvars, k);
        std::map<std::vector<int>, int> colmap;
        for (int c = 0; c < static_cast<int>(cols.size()); ++c)
            colmap.emplace(cols[static_cast<size_t>(c)], c);
        std::vector<std::vector<Int>> rows;
        for (const auto& g : gens) {
            if (g.is_zero() || g.degree() > k) continue;
            for (const auto& mult : monomials_of_degree(nvars, k - g.degree()))
                rows.push_back(g.shifted(mult).coefficient_row(colmap));
        }
        Int rank = 0;
        if (!rows.empty()) rank = exact_rank(BigIntMatrix::from_rows(rows));
        dims.push_back(Int(static_cast<long long>(cols.size())) - rank);
    }
    return dims;
}

HomogeneousPolynomial random_poly(std::mt19937_64& rng, int nvars, std::uint32_t mask,
                                  int degree, const Monomial& always_include) {
    const auto coeff = [&]() {
        const int c = 1 + static_cast<int>(rng() % 5);
        return Rat(rng() % 2 == 0 ? c : -c);
    };
    while (true) {
        HomogeneousPolynomial p(nvars, degree);
        for (const auto& e : monomials_of_degree(nvars, degree)) {
            bool inside = true;
            for (int i = 0; i < nvars && inside; ++i)
                if (e[static_cast<size_t>(i)] > 0 && !(mask >> i & 1)) inside = false;
            if (!inside) continue;
            if (e == always_include.exps() || rng() % 3 != 0) p.add_term(e, coeff());
        }
        if (!p.is_zero()) return p;
    }
}

} // namespace

TEST_CASE("homogeneous polynomial arithmetic") {
    const HomogeneousPolynomial sq = HomogeneousPolynomial::power_of_sum(2, 0b11u, 2);
    CHECK(sq.degree() == 2);
    CHECK(sq.terms() == std::map<std::vector<int>, Rat>{
                            {{2, 0}, Rat(1)}, {{1, 1}, Rat(2)}, {{0, 2}, Rat(1)}});
    CHECK(sq.support_mask() == 0b11u);

    const HomogeneousPolynomial lp =
        HomogeneousPolynomial::linear_power(2, {Rat(2), Rat(-1)}, 2);
    CHECK(lp.terms() == std::map<std::vector<int>, Rat>{
                            {{2, 0}, Rat(4)}, {{1, 1}, Rat(-4)}, {{0, 2}, Rat(1)}});

    const HomogeneousPolynomial m = HomogeneousPolynomial::from_monomial(3, Monomial({1, 0, 2}));
    CHECK(m.degree() == 3);
    CHECK(m.support_mask() == 0b101u);
    const HomogeneousPolynomial shifted = m.shifted({0, 1, 0});
    CHECK(shifted.degree() == 4);
    CHECK(shifted.terms().count({1, 1, 2}) == 1);

    HomogeneousPolynomial p(2, 1);
    p.add_term({1, 0}, Rat(1, 2));
    p.add_term({0, 1}, Rat(1, 3));
    CHECK_THROWS_AS(p.add_term({2, 0}, Rat(1)), validation_error);
    std::map<std::vector<int>, int> colmap{{{1, 0}, 0}, {{0, 1}, 1}};
    CHECK(p.coefficient_row(colmap) == std::vector<Int>{3, 2}); // times lcm 6

    // terms cancelling to zero disappear
    p.add_term({1, 0}, Rat(-1, 2));
    CHECK(p.terms().count({1, 0}) == 0);
}

TEST_CASE("power polynomials line up with the monomial family") {
    const Digraph g = example_graph().to_digraph();
    const MonomialFamily f = graph_family(g);
    const auto gens = power_generators(g);
    REQUIRE(static_cast<int>(gens.size()) == f.size());
    for (int i = 0; i < f.size(); ++i) {
        CHECK(gens[static_cast<size_t>(i)].degree() == f.gen(i).degree());
        CHECK(gens[static_cast<size_t>(i)].support_mask() == f.label(i));
    }
    // subset {1,2} leaves 3 edges, so its polynomial is (x1+x2)^3
    const int idx = f.index_of(0b011u);
    REQUIRE(idx >= 0);
    CHECK(gens[static_cast<size_t>(idx)].terms() ==
          HomogeneousPolynomial::power_of_sum(3, 0b011u, 3).terms());

    const auto rho_gens = rho_power_generators(3, {4, 2, 1});
    const MonomialFamily rf = rho_family({4, 2, 1});
    for (int i = 0; i < rf.size(); ++i) {
        const int r = __builtin_popcount(rf.label(i));
        CHECK(rho_gens[static_cast<size_t>(i)].degree() == r * (r == 1 ? 4 : r == 2 ? 2 : 1));
        CHECK(rho_gens[static_cast<size_t>(i)].degree() == rf.gen(i).degree());
    }
}

TEST_CASE("deformation test on hand-checked cases") {
    // p equal to the monomial itself
    CHECK(is_i_deformation(1, 0b1u, Monomial({2}),
                           HomogeneousPolynomial::from_monomial(1, Monomial({2}))));
    // (x1+x2)^2 deforms x1 x2
    CHECK(is_i_deformation(2, 0b11u, Monomial({1, 1}),
                           HomogeneousPolynomial::power_of_sum(2, 0b11u, 2)));
    // (x1-x2)^2 also works: the projected blocks stay nonsingular
    CHECK(is_i_deformation(2, 0b11u, Monomial({1, 1}),
                           HomogeneousPolynomial::linear_power(2, {Rat(1), Rat(-1)}, 2)));
    // x1^2 + x2^2 misses the x1 x2 coefficient entirely
    {
        HomogeneousPolynomial p(2, 2);
        p.add_term({2, 0}, Rat(1));
        p.add_term({0, 2}, Rat(1));
        CHECK_FALSE(is_i_deformation(2, 0b11u, Monomial({1, 1}), p));
    }
    // the zero polynomial never deforms anything
    CHECK_FALSE(is_i_deformation(2, 0b11u, Monomial({1, 1}), HomogeneousPolynomial(2, 2)));
    // degree mismatch and support escaping the mask are rejected
    CHECK_THROWS_AS((void)is_i_deformation(2, 0b11u, Monomial({1, 1}),
                                           HomogeneousPolynomial::power_of_sum(2, 0b11u, 3)),
                    validation_error);
    CHECK_THROWS_AS((void)is_i_deformation(2, 0b01u, Monomial({2, 0}),
                                           HomogeneousPolynomial::power_of_sum(2, 0b11u, 2)),
                    validation_error);
}

TEST_CASE("graded quotient dimensions match a dense-matrix oracle") {
    std::mt19937_64 rng(20240917);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const int count = 1 + static_cast<int>(rng() % 3);
        std::vector<HomogeneousPolynomial> gens;
        for (int i = 0; i < count; ++i) {
            const int deg = 1 + static_cast<int>(rng() % 3);
            const std::uint32_t mask = (1u << n) - 1;
            gens.push_back(random_poly(rng, n, mask, deg, Monomial::one(n)));
        }
        const int cap = 5;
        CHECK(quotient_graded_dims(n, gens, cap) == dense_quotient_dims(n, gens, cap));
    }
    // graph power ideals, where the symmetry split kicks in
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const Digraph g = random_multigraph(rng, n, 2).to_digraph();
        const auto gens = power_generators(g);
        const int cap = 6;
        CHECK(quotient_graded_dims(n, gens, cap) == dense_quotient_dims(n, gens, cap));
    }
}

TEST_CASE("monomial and power quotients agree for the example graph") {
    const Digraph g = example_graph().to_digraph();
    const SpanReport report = verify_span(graph_family(g), power_generators(g));
    CHECK(report.equal);
    CHECK(report.first_gap_degree == -1);
    REQUIRE(report.hilb_a.size() >= 3);
    CHECK(report.hilb_a[0] == 1);
    CHECK(report.hilb_a[1] == 3);
    CHECK(report.hilb_a[2] == 4);
    CHECK(report.hilb_a == report.hilb_b);
    CHECK(total(report.hilb_b) == spanning_tree_count(g));
}

TEST_CASE("monomial and power quotients agree for complete graphs") {
    for (int n = 2; n <= 3; ++n) {
        const Digraph g = complete_graph(n).to_digraph();
        const SpanReport report = verify_span(graph_family(g), power_generators(g));
        CHECK(report.equal);
        Int expect = 1;
        for (int i = 0; i < n - 1; ++i) expect *= n + 1;
        CHECK(total(report.hilb_b) == expect);
    }
}

TEST_CASE("monomial and power quotients agree for a staircase degree function") {
    const SpanReport report = verify_span(rho_family({4, 2, 1}), rho_power_generators(3, {4, 2, 1}));
    CHECK(report.equal);
    CHECK(total(report.hilb_a) == 25);
}

TEST_CASE("the (9,6,3,1) degree function separates the two quotients") {
    const std::vector<int> rho = {9, 6, 3, 1};
    const SpanReport report = verify_span(rho_family(rho), rho_power_generators(4, rho));
    CHECK_FALSE(report.equal);
    CHECK(report.first_gap_degree == 10);
    const std::vector<Int> expect_b = {1,  4,   10,  20,  34,  52,  74,  100, 130,
                                       156, 170, 172, 156, 116, 52,  12};
    REQUIRE(report.hilb_b.size() >= expect_b.size());
    for (size_t k = 0; k < expect_b.size(); ++k)
        CHECK(report.hilb_b[k] == expect_b[k]);
    for (size_t k = expect_b.size(); k < report.hilb_b.size(); ++k)
        CHECK(report.hilb_b[k] == 0);
    // the monomial side counts weighted parking vectors
    CHECK(total(report.hilb_a) == Int(static_cast<long long>(enumerate_rho_parking(rho).size())));
    for (size_t k = 0; k < report.hilb_b.size(); ++k)
        CHECK(report.hilb_b[k] <= report.hilb_a[k]);
}

TEST_CASE("failed deformations are rejected before any span comparison") {
    const MonomialFamily f(1, {{0b1u, Monomial({2})}});
    CHECK_THROWS_AS((void)verify_span(f, {HomogeneousPolynomial(1, 2)}), validation_error);
    CHECK_THROWS_AS((void)verify_span(f, {}), dimension_error);
}

TEST_CASE("random generous deformations never beat the monomial quotient") {
    std::mt19937_64 rng(777777);
    int built = 0;
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        // monotone family: m_I = prod_{i in I} x_i^{c_i + rho_|I|}
        std::vector<int> c(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = static_cast<int>(rng() % 2);
        std::vector<int> rho(static_cast<size_t>(n));
        int cur = 1 + static_cast<int>(rng() % 2);
        for (int r = n - 1; r >= 0; --r) {
            rho[static_cast<size_t>(r)] = cur;
            cur += static_cast<int>(rng() % 2);
        }
        std::vector<FamilyEntry> entries;
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> exps(static_cast<size_t>(n), 0);
            const int r = __builtin_popcount(mask);
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1)
                    exps[static_cast<size_t>(i)] = c[static_cast<size_t>(i)] + rho[static_cast<size_t>(r - 1)];
            entries.push_back({mask, Monomial(exps)});
        }
        const MonomialFamily f(n, entries);
        REQUIRE(check_conditions(f).monotone());

        // sample deformations, resampling any rejected generator
        std::vector<HomogeneousPolynomial> gens;
        bool ok = true;
        for (int i = 0; i < f.size() && ok; ++i) {
            bool found = false;
            for (int attempt = 0; attempt < 10 && !found; ++attempt) {
                HomogeneousPolynomial p =
                    random_poly(rng, n, f.label(i), f.gen(i).degree(), f.gen(i));
                if (is_i_deformation(n, f.label(i), f.gen(i), p)) {
                    gens.push_back(std::move(p));
                    found = true;
                }
            }
            ok = found;
        }
        if (!ok) continue; // exceedingly unlikely; degenerate draws exhausted
        ++built;
        const SpanReport report = verify_span(f, gens);
        for (size_t k = 0; k < report.hilb_b.size(); ++k)
            CHECK(report.hilb_b[k] <= report.hilb_a[k]);
    }
    CHECK(built >= 6);
}

TEST_CASE("alternating products of slim subgraphs span the reversed activity counts") {
    const EdgeList g = example_graph();
    const std::vector<Int> dims = cg_graded_dims(g);
    CHECK(dims == std::vector<Int>{1, 3, 4});

    // reversed activity distribution
    const std::map<int, Int> act = activity_distribution(g);
    const int max_act = act.rbegin()->first;
    std::vector<Int> reversed(static_cast<size_t>(max_act) + 1, Int(0));
    for (const auto& [k, cnt] : act) reversed[static_cast<size_t>(max_act - k)] = cnt;
    CHECK(dims == reversed);

    // power quotient of the same graph has the same graded dimensions
    const std::vector<Int> b = quotient_graded_dims(3, power_generators(g.to_digraph()), 2);
    CHECK(dims == b);
}

TEST_CASE("slim-subgraph span totals obey deletion plus contraction") {
    std::mt19937_64 rng(13579);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const EdgeList g = random_multigraph(rng, n, 2);
        CHECK(total(cg_graded_dims(g)) == spanning_tree_count(g.to_digraph()));
        int e = static_cast<int>(rng() % g.edge_count());
        const auto [u, v] = g.edge(e);
        if (u == v) continue;
        const EdgeList del = delete_edge(g, e);
        const EdgeList con = contract_edge(g, e);
        Int rhs = spanning_tree_count(con.to_digraph());
        if (del.n() >= 1) rhs += total(cg_graded_dims(del));
        CHECK(total(cg_graded_dims(g)) == rhs);
    }
}

TEST_CASE("complete-graph slim spans have square-count totals") {
    CHECK(total(cg_graded_dims(complete_graph(3))) == 16);
    // a tree keeps only the empty slim subgraph
    CHECK(cg_graded_dims(EdgeList(2, {{0, 1}, {1, 2}})) == std::vector<Int>{1});
}

TEST_CASE("forest statistics match the augmented power quotient") {
    const ForestCheckReport k3 = forest_check(complete_graph(2));
    CHECK(k3.equal);
    CHECK(total(k3.forest_counts) == 7);
    const ForestCheckReport k4 = forest_check(complete_graph(3));
    CHECK(k4.equal);
    CHECK(total(k4.forest_counts) == 38);
    CHECK(total(k4.forest_counts) ==
          Int(static_cast<long long>(enumerate_almost_parking(3).size())));

    std::mt19937_64 rng(24680);
    for (int trial = 0; trial < 5; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const EdgeList g = random_multigraph(rng, n, 2);
        const ForestCheckReport r = forest_check(g);
        CHECK(r.equal);
        CHECK(total(r.forest_counts) ==
              Int(static_cast<long long>(enumerate_subforests(g).size())));
    }
}
