#include "qrc/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace qrc {

Graph::Graph(int n) : n_(n), adj_(n, std::vector<bool>(n, false)) {
    if (n < 0) throw std::domain_error("Graph: negative vertex count");
}

void Graph::add_edge(int u, int v) {
    if (u < 1 || v < 1 || u > n_ || v > n_ || u == v)
        throw std::domain_error("Graph::add_edge: bad endpoints");
    if (u > v) std::swap(u, v);
    if (adj_[u - 1][v - 1]) return;
    adj_[u - 1][v - 1] = adj_[v - 1][u - 1] = true;
    edges_.emplace_back(u, v);
    std::sort(edges_.begin(), edges_.end());
}

Graph graph_from_dyck(const std::string& word) {
    int norths = 0, easts = 0;
    for (char ch : word) {
        if (ch == 'n')
            ++norths;
        else if (ch == 'e')
            ++easts;
        else
            throw std::domain_error("graph_from_dyck: word must be over {n, e}");
    }
    if (norths != easts) throw std::domain_error("graph_from_dyck: path does not end on the diagonal");
    const int N = norths;
    // Height of the path over column c = number of north steps before the
    // c-th east step.
    std::vector<int> height;
    int h = 0;
    for (char ch : word) {
        if (ch == 'n')
            ++h;
        else
            height.push_back(h);
    }
    for (int c = 1; c <= N; ++c)
        if (height[c - 1] < c) throw std::domain_error("graph_from_dyck: path dips below the diagonal");
    Graph g(N);
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= height[i - 1]; ++j) g.add_edge(i, j);
    return g;
}

std::string abelian_dyck_word(const Partition& shape, int m, int n) {
    if (shape.length() > n || shape.first_part() > m)
        throw std::domain_error("abelian_dyck_word: shape does not fit the board");
    std::string w(m, 'n');
    int prev = 0;
    for (int r = n; r >= 1; --r) {  // rows bottom-up trace the shape profile
        w.append(shape.part(r) - prev, 'e');
        w.push_back('n');
        prev = shape.part(r);
    }
    w.append(m - prev, 'e');
    w.append(n, 'e');
    return w;
}

Graph graph_abelian(const Partition& shape, int m, int n) {
    if (shape.length() > n || shape.first_part() > m)
        throw std::domain_error("graph_abelian: shape does not fit the board");
    Graph g(m + n);
    for (int u = 1; u <= m; ++u)
        for (int v = u + 1; v <= m; ++v) g.add_edge(u, v);
    for (int u = m + 1; u <= m + n; ++u)
        for (int v = u + 1; v <= m + n; ++v) g.add_edge(u, v);
    for (int i = 1; i <= n; ++i)
        for (int c = shape.part(n + 1 - i) + 1; c <= m; ++c) g.add_edge(c, m + i);
    return g;
}

int ascents(const Graph& g, const std::vector<int>& coloring) {
    if (static_cast<int>(coloring.size()) != g.vertex_count())
        throw std::domain_error("ascents: coloring has wrong length");
    int count = 0;
    for (const auto& [u, v] : g.edges())
        if (coloring[u - 1] < coloring[v - 1]) ++count;
    return count;
}

}  // namespace qrc
