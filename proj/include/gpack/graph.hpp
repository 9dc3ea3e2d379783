#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace gpack {

// Undirected edge, stored normalized as (min, max).
using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// adjacency lists are kept sorted and consistent with the edge set.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int order() const { return n_; }                      // v(G)
    int size() const { return static_cast<int>(edges_.size()); }  // e(G)

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    int max_degree() const;
    int min_degree() const;
    bool has_edge(int u, int v) const;

    bool connected() const;
    bool is_forest() const;
    bool is_tree() const { return connected() && size() == order() - 1; }

    // Connected components, ordered by decreasing size then smallest vertex.
    std::vector<std::vector<int>> components() const;

    // Vertices of degree 1.
    std::vector<int> leaves() const;
    // Vertices of degree >= 2 adjacent to a leaf.
    std::vector<int> nodes() const;

    // Length of a shortest cycle; nullopt iff the graph is a forest.
    std::optional<int> girth() const;

    // Induced subgraph; verts[i] becomes vertex i of the result.
    Graph induced(const std::vector<int>& verts) const;
    // Induced subgraph on the complement of `verts`, ids compacted in
    // increasing original order. If out_map is given, (*out_map)[new] = old.
    Graph removed(const std::vector<int>& verts, std::vector<int>* out_map = nullptr) const;
    // Image under a bijection perm: old vertex v becomes perm[v].
    Graph relabeled(const std::vector<int>& perm) const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Named families. Vertex numbering is part of the contract; constructions
// rely on it.
Graph path_graph(int t);                    // 0-1-2-...-t-1
Graph cycle_graph(int l);                   // path_graph(l) plus edge (0, l-1)
Graph star_graph(int n);                    // center 0, leaves 1..n-1
Graph inserted_star_graph(int a, int b);    // S_a with b vertices inserted into one edge
Graph lasso_graph(int l, int s);            // path v_1..v_l plus edge v_1 v_s (0-based ids)
Graph double_lasso_graph(int l, int s, int t);  // lasso plus edge v_l v_{l-t+1}
Graph spider_graph(const std::vector<int>& legs);  // center 0, leg i occupies the next legs[i] ids
Graph disjoint_union(const std::vector<Graph>& parts);

}  // namespace gpack
