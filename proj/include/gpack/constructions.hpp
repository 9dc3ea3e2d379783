#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gpack/graph.hpp"
#include "gpack/placement.hpp"

namespace gpack {

// Rotational dispersed k-placement of P_t in K_t (t >= 2k). Copy i+1 is copy i
// rotated by one host vertex; images of v_a and v_b with |a-b| >= 2k-1 are 2k
// pairwise distinct hosts.
Placement path_placement(int t, int k);

// Cycle, lasso and double lasso placements built from the path scheme by
// pinning v_1 (and v_l) on fresh host vertices. All vertices are k-placed
// except the pinned ones. Size preconditions: cycle l >= 2k+1; lasso
// s >= 2k+1; double lasso s, t >= 2k+1.
Placement cycle_placement(int l, int k);
Placement lasso_placement(int l, int s, int k);
Placement double_lasso_placement(int l, int s, int t, int k);

// Dispersed 4-placement of P_l1 (+) P_l2 (+) K_1 on K_{l1+l2+1}, l1+l2 >= 3.
// Vertex order: P_l1, P_l2, isolated vertex.
Placement small_union_placement(int l1, int l2);
Graph small_union_graph(int l1, int l2);

// General form: at least two paths plus K_1 (single path allowed when the
// total is at least 7). Vertex order: the paths in the given order, then K_1.
Placement paths_plus_k1_placement(const std::vector<int>& lengths);
Graph paths_plus_k1_graph(const std::vector<int>& lengths);

// Stored dispersed 4-placements of Q(2,2,3) and Q(2,2,2,2).
std::pair<Placement, Placement> spider_small_placements();

// Dispersed 4-placement of C_l (+) Q(2,2,2), l >= 9. Vertex order: cycle then
// spider.
Placement cycle_plus_spider(int l);
Graph cycle_plus_spider_graph(int l);

// 4-placement of Q(n1,n2,n3) (+) 2K_1 (2 <= n1 <= n2 <= n3) in which both
// isolated vertices and all spider nodes are 4-placed. Vertex order: spider,
// then the two isolated vertices.
Placement two_k1_plus_spider(int n1, int n2, int n3);
Graph two_k1_plus_spider_graph(int n1, int n2, int n3);

// Lemma-2 style leaf extension: U is exactly k leaves of g with pairwise
// distinct neighbours, base places g-U in K_{n-k}. The k new host vertices
// receive the leaves via k edge-disjoint matchings obtained from a proper
// k-edge-coloring of the neighbour-image bipartite graph. g-U uses compacted
// ids in increasing original order.
Placement extend_by_leaves(const Graph& g, const std::vector<int>& leaves, const Placement& base);

// Observation-1 style re-attachment: every deleted leaf returns on its own
// fresh host vertex, k-fixed; requires each leaf's neighbour to be k-placed
// in base.
Placement attach_leaves_fixed(const Graph& g, const std::vector<int>& leaves, const Placement& base);

// (A,U,B)-structure composition. phi_a / phi_b are placements of the induced
// subgraphs on a_verts / b_verts (in list order). U may be disjoint from both
// or contained in one of them.
struct ABPartition {
    const Graph* g = nullptr;
    std::vector<int> a_verts, b_verts, u_verts;
    std::optional<int> a_vertex;  // the distinguished vertex; auto-detected if absent
    Placement phi_a, phi_b;
};
Placement compose_structure(const ABPartition& part);

// Iterated-embedding packing for max degree <= 2 (guaranteed for
// n >= 6k-4; search exhaustion below that is reported as not-ok, never as a
// nonexistence claim).
struct MaxDeg2Result {
    bool ok = false;
    Placement placement;
};
MaxDeg2Result pack_max_degree_two(const Graph& g, int k);

// (n,n+1)-graphs with girth >= 2k+1 and min degree >= 2, k >= 4: cycle
// components are packed by the cycle scheme, the remaining component is a
// double lasso.
Placement pack_n_plus_one(const Graph& g, int k);

// Internal assembly helper: block-diagonal union of per-part placements plus
// individually pinned vertices. Used to realize the block decompositions.
class BlockAssembly {
public:
    BlockAssembly(int k, int n_total) : k_(k), maps_(k, std::vector<int>(n_total, -1)) {}
    // g_vertices[j] is the graph vertex playing local vertex j of `local`.
    void add_block(const std::vector<int>& g_vertices, const Placement& local);
    int add_fixed(int g_vertex);  // returns the host index
    int host_count() const { return next_host_; }
    Placement finish() const;

private:
    int k_;
    int next_host_ = 0;
    std::vector<std::vector<int>> maps_;
};

}  // namespace gpack
