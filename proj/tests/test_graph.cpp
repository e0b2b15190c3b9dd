#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "parq/errors.hpp"
#include "parq/graph.hpp"

using namespace parq;

namespace {

// The five-edge graph on vertices {0,1,2,3} used as the running example:
// a four-cycle 0-1-2-3 plus the diagonal 1-3.
EdgeList example_graph() {
    return EdgeList(3, {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Digraph random_digraph(std::mt19937_64& rng, int n, int max_mult) {
    Digraph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (j != i) g.set(i, j, static_cast<long long>(rng() % (max_mult + 1)));
    // make sure the determinant has a chance to be nonzero: guarantee an
    // edge toward the root from vertex 1 and a path down the indices
    for (int i = 1; i <= n; ++i)
        if (g.a(i, i - 1) == 0) g.set(i, i - 1, 1);
    return g;
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

// Brute-force connectivity of (vertexes 0..n, edge subset).
bool connected_on_all(const EdgeList& g, const std::vector<int>& keep) {
    const int n = g.n();
    std::vector<int> comp(static_cast<size_t>(n) + 1);
    for (int v = 0; v <= n; ++v) comp[static_cast<size_t>(v)] = v;
    const std::function<int(int)> find = [&](int v) {
        while (comp[static_cast<size_t>(v)] != v) {
            comp[static_cast<size_t>(v)] = comp[static_cast<size_t>(comp[static_cast<size_t>(v)])];
            v = comp[static_cast<size_t>(v)];
        }
        return v;
    };
    for (int e : keep) {
        const auto [u, v] = g.edge(e);
        comp[static_cast<size_t>(find(u))] = find(v);
    }
    for (int v = 1; v <= n; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

} // namespace

TEST_CASE("truncated laplacian and tree count of the example graph") {
    const EdgeList g = example_graph();
    const Digraph d = g.to_digraph();
    const BigIntMatrix l = truncated_laplacian(d);
    CHECK(l.at(0, 0) == 3); // vertex 1 has degree 3
    CHECK(l.at(1, 1) == 2);
    CHECK(l.at(2, 2) == 3);
    CHECK(l.at(0, 1) == -1);
    CHECK(l.at(1, 0) == -1);
    CHECK(l.at(0, 2) == -1);
    CHECK(spanning_tree_count(d) == 8);
    CHECK(enumerate_spanning_trees(g).size() == 8);
}

TEST_CASE("complete graphs follow the (n+1)^(n-1) count") {
    for (int n = 1; n <= 5; ++n) {
        const EdgeList k = complete_graph(n);
        CHECK(k.edge_count() == (n + 1) * n / 2);
        Int expect = 1;
        for (int i = 0; i < n - 1; ++i) expect *= n + 1;
        CHECK(spanning_tree_count(k.to_digraph()) == expect);
    }
}

TEST_CASE("enumerated spanning trees match the determinant") {
    std::mt19937_64 rng(20240917);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const EdgeList g = random_multigraph(rng, n, 3);
        const auto trees = enumerate_spanning_trees(g);
        CHECK(Int(static_cast<long long>(trees.size())) == spanning_tree_count(g.to_digraph()));
        for (const auto& t : trees) {
            CHECK(static_cast<int>(t.size()) == n);
            CHECK(connected_on_all(g, t));
        }
    }
}

TEST_CASE("oriented spanning trees of digraphs match the determinant") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const Digraph g = random_digraph(rng, n, 2);
        const auto trees = enumerate_oriented_spanning_trees(g, 64);
        CHECK(Int(static_cast<long long>(trees.size())) == spanning_tree_count(g));
    }
}

TEST_CASE("external activity distribution of small graphs") {
    // triangle: two trees with activity 0, one with activity 1
    const EdgeList k3 = complete_graph(2);
    const std::map<int, Int> d3 = activity_distribution(k3);
    CHECK(d3 == std::map<int, Int>{{0, Int(2)}, {1, Int(1)}});

    // K4: 6 + 6y + 3y^2 + y^3
    const std::map<int, Int> d4 = activity_distribution(complete_graph(3));
    CHECK(d4 == std::map<int, Int>{{0, Int(6)}, {1, Int(6)}, {2, Int(3)}, {3, Int(1)}});

    // example graph: 4 + 3y + y^2
    const std::map<int, Int> de = activity_distribution(example_graph());
    CHECK(de == std::map<int, Int>{{0, Int(4)}, {1, Int(3)}, {2, Int(1)}});
}

TEST_CASE("tree inversions distribute like external activity on complete graphs") {
    for (int n = 2; n <= 4; ++n) {
        const EdgeList k = complete_graph(n);
        std::map<int, Int> inv_dist;
        for (const auto& t : enumerate_spanning_trees(k))
            inv_dist[tree_inversions(root_tree_parents(k, t))] += 1;
        CHECK(inv_dist == activity_distribution(k));
    }
}

TEST_CASE("parent vectors and inversion counting on known trees") {
    const EdgeList k3 = complete_graph(2); // edges (0,1),(0,2),(1,2)
    // star at the root
    CHECK(root_tree_parents(k3, {0, 1}) == std::vector<int>{-1, 0, 0});
    CHECK(tree_inversions({-1, 0, 0}) == 0);
    // path 0-1-2: parent of 2 is 1
    CHECK(root_tree_parents(k3, {0, 2}) == std::vector<int>{-1, 0, 1});
    CHECK(tree_inversions({-1, 0, 1}) == 0);
    // path 0-2-1: vertex 2 sits on the path from 1, one inversion
    CHECK(root_tree_parents(k3, {1, 2}) == std::vector<int>{-1, 2, 0});
    CHECK(tree_inversions({-1, 2, 0}) == 1);
}

TEST_CASE("slim subgraphs are exactly the complements of connected subgraphs") {
    CHECK(enumerate_slim_subgraphs(complete_graph(2)).size() == 4);
    CHECK(enumerate_slim_subgraphs(complete_graph(3)).size() == 38);

    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const EdgeList g = random_multigraph(rng, n, 2);
        const auto slim = enumerate_slim_subgraphs(g);
        // oracle: count all subsets whose complement connects every vertex
        const int m = g.edge_count();
        int expect = 0;
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<int> complement;
            for (int e = 0; e < m; ++e)
                if (!(mask >> e & 1)) complement.push_back(e);
            if (connected_on_all(g, complement)) ++expect;
        }
        CHECK(static_cast<int>(slim.size()) == expect);
        // slim sets are closed under taking subsets, so sizes are contiguous
        std::vector<int> by_size;
        for (const auto& h : slim) {
            if (static_cast<int>(by_size.size()) <= static_cast<int>(h.size()))
                by_size.resize(h.size() + 1, 0);
            ++by_size[h.size()];
        }
        for (int c : by_size) CHECK(c > 0);
    }
}

TEST_CASE("subforest enumeration matches an acyclicity oracle") {
    CHECK(enumerate_subforests(complete_graph(2)).size() == 7);
    CHECK(enumerate_subforests(complete_graph(3)).size() == 38);

    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const EdgeList g = random_multigraph(rng, n, 2);
        const int m = g.edge_count();
        int expect = 0;
        for (int mask = 0; mask < (1 << m); ++mask) {
            // acyclic iff every prefix union joins two distinct components
            std::vector<int> comp(static_cast<size_t>(n) + 1);
            for (int v = 0; v <= n; ++v) comp[static_cast<size_t>(v)] = v;
            const std::function<int(int)> find = [&](int v) {
                while (comp[static_cast<size_t>(v)] != v) v = comp[static_cast<size_t>(v)] =
                    comp[static_cast<size_t>(comp[static_cast<size_t>(v)])];
                return v;
            };
            bool acyclic = true;
            for (int e = 0; e < m && acyclic; ++e) {
                if (!(mask >> e & 1)) continue;
                const auto [u, v] = g.edge(e);
                const int ru = find(u), rv = find(v);
                if (ru == rv)
                    acyclic = false;
                else
                    comp[static_cast<size_t>(ru)] = rv;
            }
            if (acyclic) ++expect;
        }
        CHECK(static_cast<int>(enumerate_subforests(g).size()) == expect);
    }
}

TEST_CASE("deletion plus contraction preserves the tree count") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const EdgeList g = random_multigraph(rng, n, 3);
        const int e = static_cast<int>(rng() % g.edge_count());
        const auto [u, v] = g.edge(e);
        if (u == v) continue;
        const Int total = spanning_tree_count(g.to_digraph());
        const Int del = spanning_tree_count(delete_edge(g, e).to_digraph());
        const Int con = spanning_tree_count(contract_edge(g, e).to_digraph());
        CHECK(total == del + con);
    }
}

TEST_CASE("two-parameter complete graphs have determinant l(l+kn)^(n-1)") {
    struct Case {
        int n, k, l;
    };
    for (const Case c : {Case{2, 1, 2}, Case{2, 2, 1}, Case{3, 1, 2}, Case{3, 2, 2}, Case{4, 1, 1}}) {
        const EdgeList g = make_complete_kl(c.n, c.k, c.l);
        Int expect = c.l;
        for (int i = 0; i < c.n - 1; ++i) expect *= c.l + c.k * c.n;
        CHECK(spanning_tree_count(g.to_digraph()) == expect);
    }
}

TEST_CASE("digraph bookkeeping") {
    Digraph g(2);
    g.add_edge(1, 2, 2);
    g.add_edge(1, 1, 5); // loop, ignored by degrees
    g.add_edge(2, 0);
    CHECK(g.a(1, 2) == 2);
    CHECK(g.out_degree(1) == 2);
    CHECK(g.out_degree(2) == 1);
    CHECK_FALSE(g.symmetric());
    g.add_edge(2, 1, 2);
    CHECK(g.a(2, 1) == 2);

    const Digraph h = Digraph::from_adjacency({{0, 1, 0}, {1, 0, 2}, {0, 2, 0}});
    CHECK(h.n() == 2);
    CHECK(h.symmetric());
    const EdgeList el = EdgeList::from_digraph(h);
    CHECK(el.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 2}});
}

TEST_CASE("forest inversions agree with the tree count on each component") {
    const EdgeList k3 = complete_graph(2);
    CHECK(forest_inversions(k3, {}) == 0);
    // single edge (1,2): component {1,2} rooted at 1; no larger-on-path pairs
    CHECK(forest_inversions(k3, {2}) == 0);
}
