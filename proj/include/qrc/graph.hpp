#pragma once

#include <string>
#include <vector>

#include "qrc/partition.hpp"

namespace qrc {

/// Simple loop-free graph on vertices 1..N carrying the natural total order.
class Graph {
public:
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    bool adjacent(int u, int v) const { return adj_[u - 1][v - 1]; }
    void add_edge(int u, int v);
    int edge_count() const { return static_cast<int>(edges_.size()); }
    /// Sorted list of edges (u, v) with u < v.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_;
    std::vector<std::vector<bool>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

/// Graph of a Dyck path given as a word in 'n' and 'e' from (0,0) to (N,N):
/// edge (i,j), i < j, iff the cell (i,j) lies below the path, i.e.
/// j <= height of the path over column i.
Graph graph_from_dyck(const std::string& word);

/// Abelian graph: cliques on {1..m} and {m+1..m+n} plus the bipartite
/// complement of λ: edge {c, m+i} iff λ_{n+1-i} < c. Equals
/// graph_from_dyck(abelian_dyck_word(λ, m, n)). Requires λ ⊂ n×m; m, n >= 0
/// in either order (boards require n <= m, graphs do not).
Graph graph_abelian(const Partition& shape, int m, int n);

/// The path n^m w(λ) e^n.
std::string abelian_dyck_word(const Partition& shape, int m, int n);

/// Number of edges {v_i, v_j}, i < j, with κ(v_i) < κ(v_j). Colorings are
/// 1-based vectors of positive colors; properness is not required.
int ascents(const Graph& g, const std::vector<int>& coloring);

}  // namespace qrc
