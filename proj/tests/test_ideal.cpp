#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "parq/errors.hpp"
#include "parq/family.hpp"
#include "parq/graph.hpp"
#include "parq/ideal.hpp"
#include "parq/parking.hpp"

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

std::vector<std::vector<int>> exponent_vectors(const std::vector<Monomial>& ms) {
    std::vector<std::vector<int>> out;
    out.reserve(ms.size());
    for (const auto& m : ms) out.push_back(m.exps());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("structural conditions of the standard families") {
    // complete graph: monotone and generic
    const ConditionReport k4 = check_conditions(graph_family(complete_graph(3).to_digraph()));
    CHECK(k4.monotone());
    CHECK(k4.gm == Verdict::pass);

    // example graph: monotone, but x1 x3 divides x1^2 x3^2
    const ConditionReport ex = check_conditions(graph_family(example_graph().to_digraph()));
    CHECK(ex.monotone());
    CHECK(ex.sm1 == Verdict::fail);
    CHECK_FALSE(ex.strictly_monotone());
    REQUIRE_FALSE(ex.witnesses.empty());
    CHECK(ex.witnesses.front().condition == "SM1");

    // three-generator family: strictly monotone, not generic (no generator
    // strictly divides lcm(x1^2 x2^2, x2^2 x3) = x1^2 x2^2 x3)
    const ConditionReport tg = check_conditions(three_gen_family());
    CHECK(tg.strictly_monotone());
    CHECK(tg.gm == Verdict::fail);

    // strictly decreasing positive degree function: strictly monotone
    CHECK(check_conditions(rho_family({3, 1})).strictly_monotone());
    // stationary degree function: monotone, but x1^2 divides x1^2 x2^2
    const ConditionReport flat = check_conditions(rho_family({2, 2}));
    CHECK(flat.monotone());
    CHECK(flat.sm1 == Verdict::fail);
    CHECK(flat.sm2 == Verdict::pass); // no three-level chain on two vertices

    // minimal generators but a flat exponent step on the top chain:
    // nu_{12}(2) = nu_{123}(2), so the middle level has no strict drop
    const MonomialFamily flat_step(3, {
        {0b001u, Monomial({3, 0, 0})},
        {0b011u, Monomial({2, 2, 0})},
        {0b111u, Monomial({1, 2, 1})},
    });
    const ConditionReport fs = check_conditions(flat_step);
    CHECK(fs.monotone());
    CHECK(fs.sm1 == Verdict::pass);
    CHECK(fs.sm2 == Verdict::fail);

    CHECK(check_conditions(kl_family(3, 1, 2)).strictly_monotone());
    CHECK(check_conditions(hat_family(3)).monotone());
}

TEST_CASE("condition violations carry witnesses") {
    // exponent of x1 grows from {1} to {1,2}, breaking monotonicity
    const MonomialFamily bad(2, {
        {0b01u, Monomial({1, 0})},
        {0b10u, Monomial({0, 1})},
        {0b11u, Monomial({2, 2})},
    });
    const ConditionReport r = check_conditions(bad);
    CHECK(r.mm2 == Verdict::fail);
    CHECK_FALSE(r.monotone());
    bool found = false;
    for (const auto& w : r.witnesses)
        if (w.condition == "MM2") found = true;
    CHECK(found);

    // support outside the label breaks MM1
    const MonomialFamily offlabel(2, {
        {0b01u, Monomial({1, 1})},
        {0b10u, Monomial({0, 1})},
        {0b11u, Monomial({1, 1})},
    });
    CHECK(check_conditions(offlabel).mm1 == Verdict::fail);
}

TEST_CASE("standard monomials of a graph ideal are the parking vectors") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const Digraph g = random_multigraph(rng, n, 2).to_digraph();
        const MonomialFamily f = graph_family(g);
        const StandardBasis basis = standard_basis(f);
        REQUIRE(basis.complete);
        auto park = enumerate_g_parking(g);
        std::sort(park.begin(), park.end());
        CHECK(exponent_vectors(basis.monomials) == park);
    }
}

TEST_CASE("numerator of the example graph ideal") {
    const MonomialFamily f = graph_family(example_graph().to_digraph());
    const QPolynomial num = hilbert_numerator(f);
    CHECK(num.str() == "1-2q^2-4q^3+9q^4-4q^5");
    // expanding the series over (1-q)^3 recovers 1 + 3q + 4q^2, then zeros
    const std::vector<Int> series = num.series_over_one_minus_q(3, 8);
    CHECK(series == std::vector<Int>{1, 3, 4, 0, 0, 0, 0, 0});
}

TEST_CASE("numerator expansion matches the standard basis for many families") {
    std::mt19937_64 rng(987);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const MonomialFamily f = graph_family(random_multigraph(rng, n, 3).to_digraph());
        const StandardBasis basis = standard_basis(f);
        REQUIRE(basis.complete);
        const std::vector<Int> dims = degree_counts(basis.monomials);
        const std::vector<Int> series =
            hilbert_numerator(f).series_over_one_minus_q(f.n(), static_cast<int>(dims.size()) + 3);
        for (size_t k = 0; k < dims.size(); ++k) CHECK(series[k] == dims[k]);
        for (size_t k = dims.size(); k < series.size(); ++k) CHECK(series[k] == 0);
    }
    for (const auto& rho : std::vector<std::vector<int>>{{4, 2, 1}, {3, 3, 2}, {2, 1}}) {
        const MonomialFamily f = rho_family(rho);
        const std::vector<Int> dims = degree_counts(standard_basis(f).monomials);
        const std::vector<Int> series =
            hilbert_numerator(f).series_over_one_minus_q(f.n(), static_cast<int>(dims.size()));
        CHECK(series == dims);
    }
}

TEST_CASE("numerator requires a monotone family") {
    const MonomialFamily bad(2, {
        {0b01u, Monomial({1, 0})},
        {0b10u, Monomial({0, 1})},
        {0b11u, Monomial({2, 2})},
    });
    CHECK_THROWS_AS((void)hilbert_numerator(bad), validation_error);
}

TEST_CASE("chain formula equals basis size equals tree count") {
    std::mt19937_64 rng(20240917);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const Digraph g = random_multigraph(rng, n, 2).to_digraph();
        const MonomialFamily f = graph_family(g);
        const Int dim = dimension_chain_formula(f);
        CHECK(dim == spanning_tree_count(g));
        CHECK(dim == Int(static_cast<long long>(standard_basis(f).monomials.size())));
    }
}

TEST_CASE("chain lcm follows the level-product formula") {
    const MonomialFamily f = graph_family(example_graph().to_digraph());
    // naive lcm oracle over explicit chains
    std::mt19937_64 rng(31415);
    const auto check_chain = [&](const std::vector<std::uint32_t>& chain) {
        Monomial expect = Monomial::one(f.n());
        for (std::uint32_t label : chain) {
            const int idx = f.index_of(label);
            REQUIRE(idx >= 0);
            expect = lcm(expect, f.gen(idx));
        }
        CHECK(chain_lcm(f, chain) == expect);
    };
    check_chain({0b001u});
    check_chain({0b001u, 0b011u});
    check_chain({0b010u, 0b110u, 0b111u});
    check_chain({0b001u, 0b101u, 0b111u});
    for (int trial = 0; trial < 20; ++trial) {
        // random chain: a shuffled-up nested sequence of subsets
        std::uint32_t cur = 1u << (rng() % 3);
        std::vector<std::uint32_t> chain = {cur};
        while (cur != 0b111u && rng() % 2) {
            std::uint32_t next = cur;
            while (next == cur) next = cur | (1u << (rng() % 3));
            chain.push_back(next);
            cur = next;
        }
        check_chain(chain);
    }
    CHECK_THROWS_AS((void)chain_lcm(f, {0b011u, 0b001u}), validation_error);
    CHECK_THROWS_AS((void)chain_lcm(f, {0b001u, 0b010u}), validation_error);
}

TEST_CASE("chain enumeration visits every strict chain once") {
    // order: subsets of {1,2,3} by strict inclusion, as in the families
    const MonomialFamily f = graph_family(complete_graph(3).to_digraph());
    std::set<std::vector<int>> seen;
    long long visits = 0;
    for_each_chain(f.size(), [&](int u, int v) { return f.less(u, v); },
                   [&](const std::vector<int>& chain) {
                       CHECK(seen.insert(chain).second);
                       for (size_t i = 0; i + 1 < chain.size(); ++i)
                           CHECK(f.less(chain[i], chain[i + 1]));
                       ++visits;
                   });
    CHECK(visits == static_cast<long long>(seen.size()));
    // oracle: count chains of subsets of a 3-set by brute force
    long long expect = 0;
    for (int mask = 1; mask < (1 << 7); ++mask) {
        std::vector<int> members;
        for (int i = 0; i < 7; ++i)
            if (mask >> i & 1) members.push_back(i);
        bool chain = true;
        for (size_t a = 0; a < members.size() && chain; ++a)
            for (size_t b = a + 1; b < members.size() && chain; ++b)
                if (!f.less(members[a], members[b]) && !f.less(members[b], members[a]))
                    chain = false;
        if (chain) ++expect;
    }
    CHECK(visits == expect);
}

TEST_CASE("default cap bounds every standard monomial") {
    const MonomialFamily f = graph_family(example_graph().to_digraph());
    CHECK(default_degree_cap(f) == 6); // 1 + (3-1) + (2-1) + (3-1)
    const StandardBasis basis = standard_basis(f);
    CHECK(basis.complete);
    for (const auto& m : basis.monomials) CHECK(m.degree() < default_degree_cap(f));
    // explicit small cap truncates and reports incompleteness
    const StandardBasis low = standard_basis(f, 1);
    CHECK_FALSE(low.complete);
    CHECK(low.monomials.size() == 4); // 1, x1, x2, x3
}
