#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chibound/bitset.hpp"

namespace chibound {

/// Immutable simple undirected graph on vertices 0..n-1 with per-vertex
/// neighbor bitsets. Every algorithm in the library consumes this type.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list. Edges are deduplicated; the result does not
    /// depend on input order. Rejects out-of-range endpoints and self-loops.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    int max_degree() const;

    /// Edges as sorted (u, v) pairs with u < v.
    std::vector<std::pair<int, int>> edges() const;

    Graph complement() const;

    /// Subgraph induced by S. Vertices are renumbered 0..|S|-1 in ascending
    /// order of their original labels; old_labels receives the mapping
    /// new -> old when non-null.
    Graph induced(const VertexSet& s, std::vector<int>* old_labels = nullptr) const;

    /// Image of the graph under a permutation: vertex v becomes perm[v].
    Graph relabeled(const std::vector<int>& perm) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<Bitset> adj_;
};

// Canonical small graphs. Vertex numbering is fixed so witnesses and golden
// outputs are stable.
namespace named {

Graph bull();     // triangle {0,1,2} with pendants 3 at 1 and 4 at 2
Graph diamond();  // K4 on {0,1,2,3} minus edge {0,3}
Graph paw();      // triangle {0,1,2} with pendant 3 at 2
Graph grotzsch(); // Mycielskian of C5: outer cycle 0..4, inner 5..9, hub 10
Graph path(int t);
Graph cycle(int t);                      // t >= 3
Graph complete(int t);                   // t >= 1
Graph prism(int omega);                  // K_omega x K_2: rows 0..w-1 and w..2w-1
Graph complete_bipartite(int a, int b);  // parts 0..a-1 and a..a+b-1

/// Lookup by textual name: "bull", "path(5)", "prism(3)", "complete_bipartite(2,3)", ...
Graph by_name(const std::string& name);

} // namespace named

/// Cartesian product: (a,u) ~ (b,v) iff (a==b and u~v) or (u==v and a~b).
/// Vertex (a,u) gets index a*|H| + u.
Graph cartesian_product(const Graph& g, const Graph& h);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

constexpr int kUnreachable = -1;

/// Exact distance from every vertex to the set S (multi-source BFS);
/// kUnreachable for vertices in no common component. S must be nonempty.
std::vector<int> bfs_layers(const Graph& g, const VertexSet& s);

} // namespace chibound
