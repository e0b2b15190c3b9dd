#pragma once

#include <map>
#include <utility>
#include <vector>

#include "parq/bigint.hpp"
#include "parq/matrix.hpp"

namespace parq {

// Directed multigraph on vertices 0..n where 0 is the root.  a(i,j) is the
// number of parallel edges i -> j.  Loops a(i,i) are allowed in the data
// model; the truncated Laplacian and the parking conditions ignore them.
class Digraph {
  public:
    explicit Digraph(int n);
    static Digraph from_adjacency(const std::vector<std::vector<long long>>& a);

    int n() const { return n_; }              // number of non-root vertices
    int vertex_count() const { return n_ + 1; }
    long long a(int i, int j) const { return adj_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    void set(int i, int j, long long mult);
    void add_edge(int i, int j, long long mult = 1); // directed
    void add_undirected(int i, int j, long long mult = 1);

    bool symmetric() const;
    // Out-degree of i counting everything except loops: sum_{j != i} a(i,j).
    long long out_degree(int i) const;

  private:
    int n_;
    std::vector<std::vector<long long>> adj_;
};

// Laplacian with the root row and column removed: l_ii = out_degree(i),
// l_ij = -a(i,j) for i != j (1-based vertices i,j mapped to rows 0..n-1).
BigIntMatrix truncated_laplacian(const Digraph& g);

// Number of oriented spanning trees rooted at 0 (matrix-tree determinant).
Int spanning_tree_count(const Digraph& g);

// Oriented spanning tree: parent[v] is the head of v's unique outgoing tree
// edge (parent[0] = -1), copy[v] the 0-based parallel-edge index chosen.
struct OrientedTree {
    std::vector<int> parent;
    std::vector<int> copy;
    bool operator==(const OrientedTree&) const = default;
};

// Exhaustive enumeration; guarded by total edge multiplicity <= max_edges.
std::vector<OrientedTree> enumerate_oriented_spanning_trees(const Digraph& g, int max_edges = 24);

// Undirected multigraph as a canonically ordered edge list: each edge is
// (min,max) and the list is sorted, so parallel copies sit at consecutive
// indices.  The sort order doubles as the fixed linear order on edges used
// by activity computations.
class EdgeList {
  public:
    EdgeList(int n, std::vector<std::pair<int, int>> edges);
    static EdgeList from_digraph(const Digraph& g); // requires symmetric

    int n() const { return n_; }
    int vertex_count() const { return n_ + 1; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::pair<int, int>& edge(int i) const { return edges_[static_cast<size_t>(i)]; }

    Digraph to_digraph() const;

  private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
};

// A set of edges of some EdgeList, as strictly increasing indices.
using EdgeSet = std::vector<int>;

// All spanning trees as edge sets, in lexicographic index order.
std::vector<EdgeSet> enumerate_spanning_trees(const EdgeList& g, int max_edges = 24);

// Number of edges e outside `sub` that are minimal (in the fixed edge
// order) on some cycle whose other edges all lie in `sub`.  Works for trees
// and forests alike; loops outside `sub` are always active.
int external_activity(const EdgeList& g, const EdgeSet& sub);

// activity k -> number of spanning trees attaining it.
std::map<int, Int> activity_distribution(const EdgeList& g, int max_edges = 24);

// Parent vector (rooted at 0) of a spanning tree given as an edge set.
std::vector<int> root_tree_parents(const EdgeList& g, const EdgeSet& tree);

// Pairs i > j >= 1 such that vertex i lies on the tree path from j to the
// root 0.
int tree_inversions(const std::vector<int>& parent);

// Forest version: pairs i > j with i on the path from j to the minimal
// vertex of j's component, summed over the forest.
int forest_inversions(const EdgeList& g, const EdgeSet& forest);

// Edge subsets H such that G minus H is connected on ALL n+1 vertices.
std::vector<EdgeSet> enumerate_slim_subgraphs(const EdgeList& g, int max_edges = 24);

// Acyclic edge subsets, including the empty one.
std::vector<EdgeSet> enumerate_subforests(const EdgeList& g, int max_edges = 24);

EdgeList delete_edge(const EdgeList& g, int edge_index);
// Contract a non-loop edge: the larger endpoint merges into the smaller,
// higher vertices shift down, remaining parallel copies become loops.
EdgeList contract_edge(const EdgeList& g, int edge_index);

// K_{n+1} on 0..n.
EdgeList complete_graph(int n);
// K_{n+1}^{k,l}: k parallel edges between non-root vertices, l from each
// non-root vertex to the root.
EdgeList make_complete_kl(int n, int k, int l);

} // namespace parq
