#include "parq/graph.hpp"

#include <algorithm>
#include <numeric>

#include "parq/errors.hpp"

namespace parq {

namespace {

struct Dsu {
    std::vector<int> up;
    explicit Dsu(int n) : up(static_cast<size_t>(n)) { std::iota(up.begin(), up.end(), 0); }
    int find(int x) {
        while (up[static_cast<size_t>(x)] != x) {
            up[static_cast<size_t>(x)] = up[static_cast<size_t>(up[static_cast<size_t>(x)])];
            x = up[static_cast<size_t>(x)];
        }
        return x;
    }
    // Returns false when x and y were already connected.
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        up[static_cast<size_t>(x)] = y;
        return true;
    }
};

} // namespace

Digraph::Digraph(int n) : n_(n) {
    if (n < 1) throw validation_error("graph needs at least one non-root vertex");
    adj_.assign(static_cast<size_t>(n) + 1, std::vector<long long>(static_cast<size_t>(n) + 1, 0));
}

Digraph Digraph::from_adjacency(const std::vector<std::vector<long long>>& a) {
    int v = static_cast<int>(a.size());
    if (v < 2) throw validation_error("adjacency matrix must cover the root and one more vertex");
    Digraph g(v - 1);
    for (int i = 0; i < v; ++i) {
        if (static_cast<int>(a[static_cast<size_t>(i)].size()) != v)
            throw validation_error("adjacency matrix must be square");
        for (int j = 0; j < v; ++j) g.set(i, j, a[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
    return g;
}

void Digraph::set(int i, int j, long long mult) {
    if (i < 0 || i > n_ || j < 0 || j > n_) throw validation_error("vertex out of range");
    if (mult < 0) throw validation_error("edge multiplicities must be >= 0");
    adj_[static_cast<size_t>(i)][static_cast<size_t>(j)] = mult;
}

void Digraph::add_edge(int i, int j, long long mult) {
    set(i, j, a(i, j) + mult);
}

void Digraph::add_undirected(int i, int j, long long mult) {
    if (i == j) {
        add_edge(i, i, mult);
        return;
    }
    add_edge(i, j, mult);
    add_edge(j, i, mult);
}

bool Digraph::symmetric() const {
    for (int i = 0; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (a(i, j) != a(j, i)) return false;
    return true;
}

long long Digraph::out_degree(int i) const {
    long long d = 0;
    for (int j = 0; j <= n_; ++j)
        if (j != i) d += a(i, j);
    return d;
}

BigIntMatrix truncated_laplacian(const Digraph& g) {
    const int n = g.n();
    BigIntMatrix l(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            l.at(i - 1, j - 1) = i == j ? Int(g.out_degree(i)) : Int(-g.a(i, j));
    return l;
}

Int spanning_tree_count(const Digraph& g) { return determinant(truncated_laplacian(g)); }

std::vector<OrientedTree> enumerate_oriented_spanning_trees(const Digraph& g, int max_edges) {
    long long total = 0;
    for (int i = 0; i <= g.n(); ++i)
        for (int j = 0; j <= g.n(); ++j)
            if (i != j) total += g.a(i, j);
    if (total > max_edges)
        throw capacity_error("spanning tree enumeration limited to " + std::to_string(max_edges) +
                             " edges; raise the guard to proceed");

    const int n = g.n();
    std::vector<OrientedTree> out;
    OrientedTree t;
    t.parent.assign(static_cast<size_t>(n) + 1, -1);
    t.copy.assign(static_cast<size_t>(n) + 1, -1);

    auto acyclic = [&]() {
        // Every non-root vertex must reach 0 through the parent chain.
        for (int v = 1; v <= n; ++v) {
            int steps = 0, w = v;
            while (w != 0 && steps <= n) {
                w = t.parent[static_cast<size_t>(w)];
                ++steps;
            }
            if (w != 0) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int v) -> void {
        if (v > n) {
            if (acyclic()) out.push_back(t);
            return;
        }
        for (int j = 0; j <= n; ++j) {
            if (j == v) continue;
            for (long long c = 0; c < g.a(v, j); ++c) {
                t.parent[static_cast<size_t>(v)] = j;
                t.copy[static_cast<size_t>(v)] = static_cast<int>(c);
                self(self, v + 1);
            }
        }
        t.parent[static_cast<size_t>(v)] = -1;
        t.copy[static_cast<size_t>(v)] = -1;
    };
    rec(rec, 1);
    return out;
}

EdgeList::EdgeList(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 1) throw validation_error("graph needs at least one non-root vertex");
    for (auto& [u, v] : edges_) {
        if (u < 0 || u > n || v < 0 || v > n) throw validation_error("vertex out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
}

EdgeList EdgeList::from_digraph(const Digraph& g) {
    if (!g.symmetric()) throw validation_error("edge list view needs a symmetric digraph");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i <= g.n(); ++i)
        for (int j = i; j <= g.n(); ++j)
            for (long long c = 0; c < g.a(i, j); ++c) e.emplace_back(i, j);
    return EdgeList(g.n(), std::move(e));
}

Digraph EdgeList::to_digraph() const {
    Digraph g(n_);
    for (const auto& [u, v] : edges_) g.add_undirected(u, v);
    return g;
}

namespace {

void check_edge_guard(const EdgeList& g, int max_edges, const char* what) {
    if (g.edge_count() > max_edges)
        throw capacity_error(std::string(what) + " limited to " + std::to_string(max_edges) +
                             " edges; raise the guard to proceed");
}

} // namespace

std::vector<EdgeSet> enumerate_spanning_trees(const EdgeList& g, int max_edges) {
    check_edge_guard(g, max_edges, "spanning tree enumeration");
    const int need = g.n();
    const int m = g.edge_count();
    std::vector<EdgeSet> out;
    EdgeSet cur;
    auto rec = [&](auto&& self, int idx, int chosen, Dsu dsu) -> void {
        if (chosen == need) {
            out.push_back(cur);
            return;
        }
        if (idx == m || m - idx < need - chosen) return;
        const auto& [u, v] = g.edge(idx);
        if (u != v) {
            Dsu next = dsu;
            if (next.unite(u, v)) {
                cur.push_back(idx);
                self(self, idx + 1, chosen + 1, std::move(next));
                cur.pop_back();
            }
        }
        self(self, idx + 1, chosen, std::move(dsu));
    };
    rec(rec, 0, 0, Dsu(g.vertex_count()));
    return out;
}

namespace {

// Unique path between u and v inside an acyclic edge set; empty when
// disconnected.  Returns edge indices along the path.
std::vector<int> forest_path(const EdgeList& g, const EdgeSet& sub, int u, int v) {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(g.vertex_count()));
    for (int e : sub) {
        const auto& [a, b] = g.edge(e);
        if (a == b) continue;
        adj[static_cast<size_t>(a)].emplace_back(b, e);
        adj[static_cast<size_t>(b)].emplace_back(a, e);
    }
    std::vector<int> via_edge(static_cast<size_t>(g.vertex_count()), -1);
    std::vector<int> from(static_cast<size_t>(g.vertex_count()), -1);
    std::vector<int> stack{u};
    from[static_cast<size_t>(u)] = u;
    while (!stack.empty()) {
        int w = stack.back();
        stack.pop_back();
        if (w == v) break;
        for (auto [x, e] : adj[static_cast<size_t>(w)]) {
            if (from[static_cast<size_t>(x)] != -1) continue;
            from[static_cast<size_t>(x)] = w;
            via_edge[static_cast<size_t>(x)] = e;
            stack.push_back(x);
        }
    }
    std::vector<int> path;
    if (from[static_cast<size_t>(v)] == -1) return path;
    for (int w = v; w != u; w = from[static_cast<size_t>(w)]) path.push_back(via_edge[static_cast<size_t>(w)]);
    return path;
}

void check_acyclic(const EdgeList& g, const EdgeSet& sub) {
    Dsu dsu(g.vertex_count());
    for (int e : sub) {
        const auto& [u, v] = g.edge(e);
        if (u == v || !dsu.unite(u, v)) throw validation_error("edge set must be acyclic");
    }
}

} // namespace

int external_activity(const EdgeList& g, const EdgeSet& sub) {
    check_acyclic(g, sub);
    std::vector<char> inside(static_cast<size_t>(g.edge_count()), 0);
    for (int e : sub) inside[static_cast<size_t>(e)] = 1;
    int active = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (inside[static_cast<size_t>(e)]) continue;
        const auto& [u, v] = g.edge(e);
        if (u == v) { // a loop closes a cycle by itself and is always minimal on it
            ++active;
            continue;
        }
        std::vector<int> path = forest_path(g, sub, u, v);
        if (path.empty()) continue; // endpoints in different components: no cycle
        bool minimal = true;
        for (int pe : path)
            if (pe < e) {
                minimal = false;
                break;
            }
        if (minimal) ++active;
    }
    return active;
}

std::map<int, Int> activity_distribution(const EdgeList& g, int max_edges) {
    std::map<int, Int> dist;
    for (const EdgeSet& t : enumerate_spanning_trees(g, max_edges)) dist[external_activity(g, t)] += 1;
    return dist;
}

std::vector<int> root_tree_parents(const EdgeList& g, const EdgeSet& tree) {
    if (static_cast<int>(tree.size()) != g.n()) throw validation_error("not a spanning tree");
    check_acyclic(g, tree);
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.vertex_count()));
    for (int e : tree) {
        const auto& [u, v] = g.edge(e);
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    std::vector<int> parent(static_cast<size_t>(g.vertex_count()), -2);
    parent[0] = -1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int w = stack.back();
        stack.pop_back();
        for (int x : adj[static_cast<size_t>(w)])
            if (parent[static_cast<size_t>(x)] == -2) {
                parent[static_cast<size_t>(x)] = w;
                stack.push_back(x);
            }
    }
    for (int v = 1; v < g.vertex_count(); ++v)
        if (parent[static_cast<size_t>(v)] == -2) throw validation_error("not a spanning tree");
    return parent;
}

int tree_inversions(const std::vector<int>& parent) {
    const int n = static_cast<int>(parent.size()) - 1;
    if (n < 1 || parent[0] != -1) throw validation_error("parent vector must be rooted at 0");
    int inv = 0;
    for (int j = 1; j <= n; ++j) {
        int steps = 0;
        for (int i = parent[static_cast<size_t>(j)]; i != 0; i = parent[static_cast<size_t>(i)]) {
            if (i < 0 || i > n || ++steps > n) throw validation_error("parent vector is not a tree");
            if (i > j) ++inv;
        }
    }
    return inv;
}

int forest_inversions(const EdgeList& g, const EdgeSet& forest) {
    check_acyclic(g, forest);
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.vertex_count()));
    for (int e : forest) {
        const auto& [u, v] = g.edge(e);
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    // Root every component at its minimal vertex, then count ancestor pairs
    // i > j on the path from j to its component root.
    std::vector<int> parent(static_cast<size_t>(g.vertex_count()), -2);
    for (int r = 0; r < g.vertex_count(); ++r) {
        if (parent[static_cast<size_t>(r)] != -2) continue;
        parent[static_cast<size_t>(r)] = -1; // r is minimal in its component: smaller ones came first
        std::vector<int> stack{r};
        while (!stack.empty()) {
            int w = stack.back();
            stack.pop_back();
            for (int x : adj[static_cast<size_t>(w)])
                if (parent[static_cast<size_t>(x)] == -2) {
                    parent[static_cast<size_t>(x)] = w;
                    stack.push_back(x);
                }
        }
    }
    int inv = 0;
    for (int j = 1; j < g.vertex_count(); ++j)
        for (int i = parent[static_cast<size_t>(j)]; i > 0; i = parent[static_cast<size_t>(i)])
            if (i > j) ++inv;
    return inv;
}

std::vector<EdgeSet> enumerate_slim_subgraphs(const EdgeList& g, int max_edges) {
    check_edge_guard(g, max_edges, "slim subgraph enumeration");
    const int m = g.edge_count();
    std::vector<EdgeSet> out;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        Dsu dsu(g.vertex_count());
        int comps = g.vertex_count();
        for (int e = 0; e < m; ++e) {
            if (mask >> e & 1u) continue; // e removed
            const auto& [u, v] = g.edge(e);
            if (u != v && dsu.unite(u, v)) --comps;
        }
        if (comps != 1) continue;
        EdgeSet h;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1u) h.push_back(e);
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<EdgeSet> enumerate_subforests(const EdgeList& g, int max_edges) {
    check_edge_guard(g, max_edges, "subforest enumeration");
    const int m = g.edge_count();
    std::vector<EdgeSet> out;
    EdgeSet cur;
    auto rec = [&](auto&& self, int idx, Dsu dsu) -> void {
        out.push_back(cur);
        for (int e = idx; e < m; ++e) {
            const auto& [u, v] = g.edge(e);
            if (u == v) continue;
            Dsu next = dsu;
            if (!next.unite(u, v)) continue;
            cur.push_back(e);
            self(self, e + 1, std::move(next));
            cur.pop_back();
        }
    };
    rec(rec, 0, Dsu(g.vertex_count()));
    return out;
}

EdgeList delete_edge(const EdgeList& g, int edge_index) {
    if (edge_index < 0 || edge_index >= g.edge_count()) throw validation_error("edge index out of range");
    std::vector<std::pair<int, int>> e = g.edges();
    e.erase(e.begin() + edge_index);
    return EdgeList(g.n(), std::move(e));
}

EdgeList contract_edge(const EdgeList& g, int edge_index) {
    if (edge_index < 0 || edge_index >= g.edge_count()) throw validation_error("edge index out of range");
    const auto [u, v] = g.edge(edge_index);
    if (u == v) throw validation_error("cannot contract a loop");
    if (g.n() < 2) throw validation_error("contraction would remove the last non-root vertex");
    auto remap = [&](int w) {
        if (w == v) return u;
        return w > v ? w - 1 : w;
    };
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i == edge_index) continue;
        const auto& [a, b] = g.edge(i);
        e.emplace_back(remap(a), remap(b));
    }
    return EdgeList(g.n() - 1, std::move(e));
}

EdgeList complete_graph(int n) { return make_complete_kl(n, 1, 1); }

EdgeList make_complete_kl(int n, int k, int l) {
    if (n < 1 || k < 0 || l < 0) throw validation_error("make_complete_kl takes n >= 1 and k, l >= 0");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i)
        for (int c = 0; c < l; ++c) e.emplace_back(0, i);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int c = 0; c < k; ++c) e.emplace_back(i, j);
    return EdgeList(n, std::move(e));
}

} // namespace parq
