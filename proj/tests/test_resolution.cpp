#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "parq/combinat.hpp"
#include "parq/errors.hpp"
#include "parq/family.hpp"
#include "parq/graph.hpp"
#include "parq/ideal.hpp"
#include "parq/resolution.hpp"

using namespace parq;

namespace {

EdgeList example_graph() {
    return EdgeList(3, {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// x1^2 x2^2, x2^2 x3, x1 x2 x3 labelled by {1,2}, {2,3}, {1,2,3}
MonomialFamily three_gen_family() {
    return MonomialFamily(3, {
        {0b011u, Monomial({2, 2, 0})},
        {0b110u, Monomial({0, 2, 1})},
        {0b111u, Monomial({1, 1, 1})},
    });
}

// Minimal generating family of the example-graph ideal: the redundant
// generator x1^2 x3^2 on {1,3} is left out.
MonomialFamily six_label_family() {
    return MonomialFamily(3, {
        {0b001u, Monomial({3, 0, 0})},
        {0b010u, Monomial({0, 2, 0})},
        {0b100u, Monomial({0, 0, 3})},
        {0b011u, Monomial({2, 1, 0})},
        {0b110u, Monomial({0, 1, 2})},
        {0b111u, Monomial({1, 0, 1})},
    });
}

// Five-edge graph whose seven-label family keeps a redundant generator.
EdgeList pan_graph() {
    return EdgeList(3, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
}

} // namespace

TEST_CASE("display strings of the three reference resolutions") {
    const GradedResolution r1 = order_complex_resolution(graph_family(complete_graph(3).to_digraph()));
    CHECK(r1.display() == "0 → S(-6)^6 → S(-5)^12 → S(-3)^4 ⊕ S(-4)^3 → S");
    CHECK(r1.minimal);

    const GradedResolution r2 = order_complex_resolution(six_label_family());
    CHECK(r2.display() == "0 → S(-5)^4 → S(-4)^9 → S(-2)^2 ⊕ S(-3)^4 → S");
    CHECK(r2.minimal);

    const GradedResolution r3 = order_complex_resolution(three_gen_family());
    CHECK(r3.display() == "0 → S(-4) ⊕ S(-5) → S(-3)^2 ⊕ S(-4) → S");
    CHECK(r3.minimal);
}

TEST_CASE("single generator resolves in one step") {
    const MonomialFamily f(1, {{0b1u, Monomial({4})}});
    const GradedResolution r = order_complex_resolution(f);
    CHECK(r.display() == "0 → S(-4) → S");
    CHECK(r.minimal);
    CHECK(r.betti_totals() == std::vector<Int>{1});
}

TEST_CASE("poset-labelled generators resolve through their chains") {
    const OrderIdealFamily f(2, {Monomial({2, 0}), Monomial({1, 1})}, {{0, 1}});
    const GradedResolution r = order_complex_resolution(f);
    CHECK(r.display() == "0 → S(-3) → S(-2)^2 → S");
    CHECK(r.minimal);
}

TEST_CASE("upper-bound condition is a precondition of the resolution") {
    // three incomparable singletons have no common upper bound in the family
    const MonomialFamily f(3, {
        {0b001u, Monomial({1, 0, 0})},
        {0b010u, Monomial({0, 1, 0})},
        {0b100u, Monomial({0, 0, 1})},
    });
    CHECK_THROWS_AS((void)order_complex_resolution(f), validation_error);
}

TEST_CASE("chain counts of complete-graph ideals follow the Stirling rule") {
    for (int n = 1; n <= 5; ++n) {
        const BettiTable b = betti_numbers(graph_family(complete_graph(n).to_digraph()));
        CHECK(b.minimal);
        for (int k = 1; k <= n; ++k)
            CHECK(b.total(k) == factorial(k) * stirling2(n + 1, k + 1));
        CHECK(b.total(n + 1) == 0);
    }
}

TEST_CASE("graded chain counts of the reference ideals") {
    const BettiTable k4 = betti_numbers(graph_family(complete_graph(3).to_digraph()));
    REQUIRE(k4.minimal);
    const std::map<std::pair<int, int>, Int> expect_k4 = {
        {{1, 3}, Int(4)}, {{1, 4}, Int(3)}, {{2, 5}, Int(12)}, {{3, 6}, Int(6)}};
    CHECK(k4.counts == expect_k4);

    const BettiTable r3 = betti_numbers(three_gen_family());
    REQUIRE(r3.minimal);
    const std::map<std::pair<int, int>, Int> expect_r3 = {
        {{1, 3}, Int(2)}, {{1, 4}, Int(1)}, {{2, 4}, Int(1)}, {{2, 5}, Int(1)}};
    CHECK(r3.counts == expect_r3);

    // the full seven-label family of the pan graph is not minimal
    const BettiTable r4 = betti_numbers(graph_family(pan_graph().to_digraph()));
    CHECK_FALSE(r4.minimal);
    const BettiTable ex = betti_numbers(graph_family(example_graph().to_digraph()));
    CHECK_FALSE(ex.minimal);
}

TEST_CASE("euler characteristic of a resolution matches the chain numerator") {
    const MonomialFamily k4 = graph_family(complete_graph(3).to_digraph());
    const GradedResolution r1 = order_complex_resolution(k4);
    CHECK(r1.euler_numerator().str() == "1-4q^3-3q^4+12q^5-6q^6");
    CHECK(r1.euler_numerator() == hilbert_numerator(k4));
    CHECK(euler_check(r1, k4));
    CHECK(euler_check(r1, k4, 10)); // also expand against the standard basis

    const MonomialFamily ex = graph_family(example_graph().to_digraph());
    CHECK(euler_check(order_complex_resolution(ex), ex, 8));
    CHECK(euler_check(order_complex_resolution(three_gen_family()), three_gen_family()));
    const MonomialFamily six = six_label_family();
    CHECK(euler_check(order_complex_resolution(six), six, 8));

    // corrupt one rank and the check fails
    GradedResolution bad = order_complex_resolution(k4);
    bad.terms[1][0].second += 1;
    CHECK_FALSE(euler_check(bad, k4));
}

TEST_CASE("simplicial complex bookkeeping") {
    const SimplicialComplex tri({1, 2, 5}, {{1}, {2}, {5}, {1, 2}, {1, 5}, {2, 5}});
    CHECK(tri.face_counts_by_dim() == std::vector<int>{3, 3});
    CHECK(tri.connected());
    const SimplicialComplex two_points({0, 1}, {{0}, {1}});
    CHECK_FALSE(two_points.connected());
    CHECK(SimplicialComplex({7}, {{7}}).connected());
    CHECK_THROWS_AS(SimplicialComplex({0, 1}, {{0, 1}}), validation_error);
}

TEST_CASE("lcm-unique subsets of the complete-graph generators") {
    const SimplicialComplex scarf = scarf_complex(graph_family(complete_graph(3).to_digraph()));
    CHECK(scarf.face_counts_by_dim() == std::vector<int>{7, 12, 6});
    CHECK(scarf.connected());
}

TEST_CASE("three-generator ideal has a disconnected lcm-unique complex") {
    const SimplicialComplex scarf = scarf_complex(three_gen_family());
    CHECK(scarf.face_counts_by_dim() == std::vector<int>{3, 1});
    CHECK_FALSE(scarf.connected());
    CHECK(scarf.faces() ==
          std::vector<std::vector<int>>{{0}, {1}, {2}, {1, 2}});
}

TEST_CASE("divisible generators are rejected by the subset-uniqueness scan") {
    CHECK_THROWS_AS((void)scarf_complex(std::vector<Monomial>{Monomial({1, 0}), Monomial({1, 1})}),
                    validation_error);
    const SimplicialComplex one = scarf_complex(std::vector<Monomial>{Monomial({3, 2})});
    CHECK(one.face_counts_by_dim() == std::vector<int>{1});
}

TEST_CASE("order and subset-uniqueness complexes agree exactly for saturated input") {
    CHECK(compare_order_scarf(graph_family(complete_graph(3).to_digraph())));
    CHECK(compare_order_scarf(graph_family(complete_graph(4).to_digraph())));
    CHECK(compare_order_scarf(six_label_family()));
    CHECK_FALSE(compare_order_scarf(three_gen_family()));
    CHECK_FALSE(compare_order_scarf(graph_family(pan_graph().to_digraph())));
    CHECK_FALSE(compare_order_scarf(graph_family(example_graph().to_digraph())));
}

TEST_CASE("homology ranks of the divisibility subcomplex") {
    const MonomialFamily k4 = graph_family(complete_graph(3).to_digraph());
    // nothing divides 1: empty complex, one unit in degree -1
    CHECK(subcomplex_homology(k4, Monomial::one(3)) == std::vector<Int>{1});
    // everything divides the top lcm: contractible cone
    CHECK(subcomplex_homology(k4, Monomial({3, 3, 3})) ==
          std::vector<Int>{0, 0, 0, 0});
    // just x1^3 divides: a single point
    CHECK(subcomplex_homology(k4, Monomial({3, 0, 0})) == std::vector<Int>{0, 0});

    // non-monotone family with three incomparable generators: two extra
    // components stay visible
    const MonomialFamily pts(3, {
        {0b001u, Monomial({1, 0, 0})},
        {0b010u, Monomial({0, 1, 0})},
        {0b100u, Monomial({0, 0, 1})},
    });
    CHECK(subcomplex_homology(pts, Monomial({1, 1, 1})) == std::vector<Int>{0, 2});
    CHECK(subcomplex_homology(pts, Monomial({1, 1, 0})) == std::vector<Int>{0, 1});
    CHECK(subcomplex_homology(pts, Monomial({1, 0, 0})) == std::vector<Int>{0, 0});
}

TEST_CASE("divisibility subcomplexes of monotone families are acyclic") {
    std::mt19937_64 rng(20240917);
    const std::vector<MonomialFamily> families = {
        graph_family(complete_graph(3).to_digraph()),
        graph_family(example_graph().to_digraph()),
        rho_family({4, 2, 1}),
        kl_family(3, 1, 2),
        hat_family(3),
    };
    for (const auto& f : families) {
        REQUIRE(check_conditions(f).monotone());
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<int> exps(3);
            for (int i = 0; i < 3; ++i) exps[static_cast<size_t>(i)] = static_cast<int>(rng() % 6);
            const Monomial m(exps);
            const std::vector<Int> ranks = subcomplex_homology(f, m);
            bool nonempty = false;
            for (int u = 0; u < f.size(); ++u)
                if (f.gen(u).divides(m)) nonempty = true;
            if (!nonempty) {
                CHECK(ranks == std::vector<Int>{1});
            } else {
                for (const Int& r : ranks) CHECK(r == 0);
            }
        }
    }
}
