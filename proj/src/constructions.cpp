#include "gpack/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gpack/fixtures.hpp"

namespace gpack {
namespace {

void check_verified(const Graph& g, const Placement& p, const char* what) {
    auto rep = verify(g, p);
    if (!rep.ok) throw std::logic_error(std::string(what) + ": construction failed verification");
}

// host of path vertex at 1-based position pos under copy i (1-based), Eq-style
// alternating scheme; result is 0-based.
int path_host(int t, int i, int pos) {
    long long x = (pos % 2 == 1) ? i + (pos - 1) / 2 : static_cast<long long>(t) - pos / 2 + i;
    return static_cast<int>((x - 1 + 2LL * t) % t);
}

// Proper k-edge-coloring of a bipartite graph given as (left, right) pairs
// with left in 0..k-1. Right vertices are arbitrary ints. Color count k must
// be at least the maximum degree.
std::vector<int> bipartite_edge_coloring(int k, const std::vector<std::pair<int, int>>& edges) {
    // at[vertex][color] = edge index or -1; vertices are left (0..k-1) and
    // right (remapped after the left block)
    std::vector<int> rights;
    for (const auto& [l, r] : edges) rights.push_back(r);
    std::sort(rights.begin(), rights.end());
    rights.erase(std::unique(rights.begin(), rights.end()), rights.end());
    auto rid = [&](int r) {
        return k + static_cast<int>(std::lower_bound(rights.begin(), rights.end(), r) - rights.begin());
    };
    int nv = k + static_cast<int>(rights.size());
    std::vector<std::vector<int>> at(nv, std::vector<int>(k, -1));
    std::vector<int> color(edges.size(), -1);
    auto free_color = [&](int v) {
        for (int c = 0; c < k; ++c)
            if (at[v][c] < 0) return c;
        throw std::logic_error("edge coloring: no free color");
    };
    auto other = [&](int e, int v) {
        int l = edges[e].first, r = rid(edges[e].second);
        return v == l ? r : l;
    };
    for (size_t e = 0; e < edges.size(); ++e) {
        int u = edges[e].first, w = rid(edges[e].second);
        int a = free_color(u), b = free_color(w);
        if (a != b) {
            // flip the maximal (a,b)-alternating path starting at w; it cannot
            // end in u since the graph is bipartite and a is free at u
            std::vector<int> path;
            int v = w, want = a;
            while (at[v][want] >= 0) {
                int e2 = at[v][want];
                path.push_back(e2);
                v = other(e2, v);
                want = want == a ? b : a;
            }
            for (int e2 : path) {
                int x = edges[e2].first, y = rid(edges[e2].second);
                if (at[x][color[e2]] == e2) at[x][color[e2]] = -1;
                if (at[y][color[e2]] == e2) at[y][color[e2]] = -1;
            }
            for (int e2 : path) {
                color[e2] = color[e2] == a ? b : a;
                at[edges[e2].first][color[e2]] = e2;
                at[rid(edges[e2].second)][color[e2]] = e2;
            }
        }
        color[e] = a;
        at[u][a] = static_cast<int>(e);
        at[w][a] = static_cast<int>(e);
    }
    return color;
}

}  // namespace

Placement path_placement(int t, int k) {
    if (k < 1) throw std::invalid_argument("path_placement: k >= 1");
    if (t < 2 * k) throw std::invalid_argument("path_placement: need t >= 2k");
    Placement p{k, t, std::vector<std::vector<int>>(k, std::vector<int>(t))};
    for (int i = 1; i <= k; ++i)
        for (int pos = 1; pos <= t; ++pos)
            p.maps[i - 1][pos - 1] = path_host(t, i, pos);
    check_verified(path_graph(t), p, "path_placement");
    return p;
}

Placement lasso_placement(int l, int s, int k) {
    if (k < 1) throw std::invalid_argument("lasso_placement: k >= 1");
    if (!(3 <= s && s <= l)) throw std::invalid_argument("lasso_placement: need 3 <= s <= l");
    if (s < 2 * k + 1) throw std::invalid_argument("lasso_placement: need s >= 2k+1");
    // v_2..v_l is a path on hosts 0..l-2; v_1 is pinned on host l-1 and joined
    // to the images of v_2 and v_s, which are pairwise distinct by the
    // distance property (s-2 >= 2k-1).
    Placement p{k, l, std::vector<std::vector<int>>(k, std::vector<int>(l))};
    for (int i = 1; i <= k; ++i) {
        p.maps[i - 1][0] = l - 1;
        for (int pos = 1; pos <= l - 1; ++pos)
            p.maps[i - 1][pos] = path_host(l - 1, i, pos);
    }
    check_verified(lasso_graph(l, s), p, "lasso_placement");
    return p;
}

Placement cycle_placement(int l, int k) {
    if (l < 2 * k + 1) throw std::invalid_argument("cycle_placement: need l >= 2k+1");
    return lasso_placement(l, l, k);
}

Placement double_lasso_placement(int l, int s, int t, int k) {
    if (k < 1) throw std::invalid_argument("double_lasso_placement: k >= 1");
    if (!(3 <= s && s <= l && 3 <= t && t < l))
        throw std::invalid_argument("double_lasso_placement: parameter ranges");
    if (s < 2 * k + 1 || t < 2 * k + 1)
        throw std::invalid_argument("double_lasso_placement: need s,t >= 2k+1");
    Placement p{k, l, std::vector<std::vector<int>>(k, std::vector<int>(l))};
    if (s < l) {
        // v_2..v_{l-1} on hosts 0..l-3; v_1 -> l-2, v_l -> l-1
        for (int i = 1; i <= k; ++i) {
            p.maps[i - 1][0] = l - 2;
            p.maps[i - 1][l - 1] = l - 1;
            for (int pos = 1; pos <= l - 2; ++pos)
                p.maps[i - 1][pos] = path_host(l - 2, i, pos);
        }
    } else {
        // s == l: the second chord lies inside the path v_2..v_l
        for (int i = 1; i <= k; ++i) {
            p.maps[i - 1][0] = l - 1;
            for (int pos = 1; pos <= l - 1; ++pos)
                p.maps[i - 1][pos] = path_host(l - 1, i, pos);
        }
    }
    check_verified(double_lasso_graph(l, s, t), p, "double_lasso_placement");
    return p;
}

Graph paths_plus_k1_graph(const std::vector<int>& lengths) {
    std::vector<Graph> parts;
    for (int l : lengths) parts.push_back(path_graph(l));
    parts.push_back(Graph(1, {}));
    return disjoint_union(parts);
}

Graph small_union_graph(int l1, int l2) {
    return paths_plus_k1_graph({l1, l2});
}

Placement paths_plus_k1_placement(const std::vector<int>& lengths) {
    if (lengths.empty()) throw std::invalid_argument("paths_plus_k1: no paths");
    for (int l : lengths)
        if (l < 1) throw std::invalid_argument("paths_plus_k1: path order >= 1");
    int total = std::accumulate(lengths.begin(), lengths.end(), 0);
    if (lengths.size() == 1 && total < 7)
        throw std::invalid_argument("paths_plus_k1: single path needs order >= 7");
    if (total < 3) throw std::invalid_argument("paths_plus_k1: need total order >= 3");
    const int n = total + 1;
    Placement out{4, n, std::vector<std::vector<int>>(4, std::vector<int>(n))};
    if (total >= 7) {
        // carve segments out of a dispersed placement of P_{total+1}; the
        // vertex layout is already the big path with segment edges dropped
        Placement big = path_placement(n, 4);
        out.maps = big.maps;
    } else {
        // stored tables, keyed by the sorted two-part split (first path, rest)
        int a = lengths[0], b = total - a;
        Placement fix = load_small_union_fixture(std::min(a, b), std::max(a, b));
        // fixture vertex order: P_min, P_max, K_1
        int mn = std::min(a, b), mx = std::max(a, b);
        std::vector<int> fixture_of(n);
        // our order: P_a then the remaining paths (total b), then K_1
        for (int j = 0; j < a; ++j) fixture_of[j] = (a == mn) ? j : mn + j;
        for (int j = 0; j < b; ++j) fixture_of[a + j] = (a == mn) ? mn + j : j;
        fixture_of[n - 1] = n - 1;
        for (int i = 0; i < 4; ++i)
            for (int v = 0; v < n; ++v) out.maps[i][v] = fix.maps[i][fixture_of[v]];
    }
    Graph g = paths_plus_k1_graph(lengths);
    check_verified(g, out, "paths_plus_k1_placement");
    if (!dispersed(out)) throw std::logic_error("paths_plus_k1_placement: not dispersed");
    return out;
}

Placement small_union_placement(int l1, int l2) {
    if (l1 < 1 || l2 < 1 || l1 + l2 < 3)
        throw std::invalid_argument("small_union_placement: need l1+l2 >= 3");
    return paths_plus_k1_placement({l1, l2});
}

std::pair<Placement, Placement> spider_small_placements() {
    Placement a = load_spider_fixture_q223();
    Placement b = load_spider_fixture_q2222();
    check_verified(spider_graph({2, 2, 3}), a, "spider_small_placements q223");
    check_verified(spider_graph({2, 2, 2, 2}), b, "spider_small_placements q2222");
    if (!dispersed(a) || !dispersed(b))
        throw std::logic_error("spider_small_placements: fixture not dispersed");
    return {a, b};
}

Graph cycle_plus_spider_graph(int l) {
    return disjoint_union({cycle_graph(l), spider_graph({2, 2, 2})});
}

Placement cycle_plus_spider(int l) {
    if (l < 9) throw std::invalid_argument("cycle_plus_spider: l >= 9");
    // Rewire a dispersed placement of P_{l-1} (+) Q(2,2,3): the tip of the long
    // spider leg closes the cycle through both path ends, and its leg edge is
    // dropped.
    Placement pp = path_placement(l - 1, 4);
    Placement q = load_spider_fixture_q223();
    const int off = l - 1;
    const int n = l + 7;
    Placement out{4, n, std::vector<std::vector<int>>(4, std::vector<int>(n))};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < l - 1; ++j) out.maps[i][j] = pp.maps[i][j];
        out.maps[i][l - 1] = off + q.maps[i][7];  // v_3^3 becomes a cycle vertex
        for (int m = 0; m < 7; ++m) out.maps[i][l + m] = off + q.maps[i][m];
    }
    Graph g = cycle_plus_spider_graph(l);
    check_verified(g, out, "cycle_plus_spider");
    if (!dispersed(out)) throw std::logic_error("cycle_plus_spider: not dispersed");
    return out;
}

Graph two_k1_plus_spider_graph(int n1, int n2, int n3) {
    return disjoint_union({spider_graph({n1, n2, n3}), Graph(1, {}), Graph(1, {})});
}

Placement two_k1_plus_spider(int n1, int n2, int n3) {
    if (!(2 <= n1 && n1 <= n2 && n2 <= n3))
        throw std::invalid_argument("two_k1_plus_spider: need 2 <= n1 <= n2 <= n3");
    const int N = 1 + n1 + n2 + n3;  // spider order
    const int isoA = N, isoB = N + 1;
    const int n = N + 2;
    Graph g = two_k1_plus_spider_graph(n1, n2, n3);

    if (n2 + n3 >= 6) {
        // Join the isolated vertices between the tips of legs 2 and 3 to form
        // the lasso L(n1+n2+n3+3, n2+n3+3) whose only pinned vertex is the
        // first vertex of leg 3 (not a node since n3 >= 3).
        int l = n1 + n2 + n3 + 3, s = n2 + n3 + 3;
        std::vector<int> seq;  // seq[pos] = graph vertex at lasso position pos+1
        int leg3_first = 1 + n1 + n2;
        for (int j = 0; j < n3; ++j) seq.push_back(leg3_first + j);
        seq.push_back(isoB);
        seq.push_back(isoA);
        int leg2_first = 1 + n1;
        for (int j = n2 - 1; j >= 0; --j) seq.push_back(leg2_first + j);
        seq.push_back(0);  // center = v_s
        for (int j = 0; j < n1; ++j) seq.push_back(1 + j);  // tail = leg 1
        Placement lp = lasso_placement(l, s, 4);
        Placement out{4, l, std::vector<std::vector<int>>(4, std::vector<int>(n))};
        for (int i = 0; i < 4; ++i)
            for (int pos = 0; pos < l; ++pos) out.maps[i][seq[pos]] = lp.maps[i][pos];
        check_verified(g, out, "two_k1_plus_spider");
        return out;
    }
    if (n1 == 2 && n2 == 2 && n3 == 2) {
        // restriction of the dispersed Q(2,2,2,2) placement: leg 4 plays 2K_1
        Placement q = load_spider_fixture_q2222();
        Placement out{4, 9, std::vector<std::vector<int>>(4, std::vector<int>(9))};
        for (int i = 0; i < 4; ++i) {
            for (int v = 0; v < 7; ++v) out.maps[i][v] = q.maps[i][v];
            out.maps[i][isoA] = q.maps[i][7];
            out.maps[i][isoB] = q.maps[i][8];
        }
        check_verified(g, out, "two_k1_plus_spider(2,2,2)");
        if (!dispersed(out)) throw std::logic_error("two_k1_plus_spider(2,2,2): not dispersed");
        return out;
    }
    // (2,2,3): re-attach the tip of leg 3 onto the (2,2,2) placement
    Placement base = two_k1_plus_spider(2, 2, 2);
    int tip = 1 + 2 + 2 + 2;  // v_3^3 in the (2,2,3) spider ids
    return attach_leaves_fixed(g, {tip}, base);
}

Placement extend_by_leaves(const Graph& g, const std::vector<int>& leaves, const Placement& base) {
    const int k = base.k;
    const int n = g.order();
    if (static_cast<int>(leaves.size()) != k)
        throw std::invalid_argument("extend_by_leaves: need exactly k leaves");
    std::vector<int> nbr(leaves.size());
    for (size_t m = 0; m < leaves.size(); ++m) {
        if (g.degree(leaves[m]) != 1) throw std::invalid_argument("extend_by_leaves: not a leaf");
        nbr[m] = g.neighbors(leaves[m])[0];
    }
    {
        auto s = nbr;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("extend_by_leaves: duplicate neighbors");
    }
    std::vector<int> keep_map;
    Graph reduced = g.removed(leaves, &keep_map);
    if (base.n_host != n - k || base.domain_size() != n - k)
        throw std::invalid_argument("extend_by_leaves: base must place g-U in K_{n-k}");
    {
        auto rep = verify(reduced, base);
        if (!rep.ok) throw std::invalid_argument("extend_by_leaves: invalid base placement");
    }
    std::vector<int> old_to_new(n, -1);
    for (size_t j = 0; j < keep_map.size(); ++j) old_to_new[keep_map[j]] = static_cast<int>(j);

    // Bipartite graph on copy slots vs. neighbour images, one edge per
    // (copy, image) incidence; a proper k-coloring exists since the maximum
    // degree is k.
    std::vector<std::pair<int, int>> bedges;
    for (int i = 0; i < k; ++i) {
        std::vector<int> vi;
        for (int x : nbr) vi.push_back(base.maps[i][old_to_new[x]]);
        std::sort(vi.begin(), vi.end());
        for (int w : vi) bedges.emplace_back(i, w);
    }
    std::vector<int> color = bipartite_edge_coloring(k, bedges);
    auto color_of = [&](int i, int w) {
        for (size_t e = 0; e < bedges.size(); ++e)
            if (bedges[e].first == i && bedges[e].second == w) return color[e];
        throw std::logic_error("extend_by_leaves: missing bipartite edge");
    };

    Placement out{k, n, std::vector<std::vector<int>>(k, std::vector<int>(n))};
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < n - k; ++j) out.maps[i][keep_map[j]] = base.maps[i][j];
        for (size_t m = 0; m < leaves.size(); ++m) {
            int w = base.maps[i][old_to_new[nbr[m]]];
            out.maps[i][leaves[m]] = (n - k) + color_of(i, w);
        }
    }
    check_verified(g, out, "extend_by_leaves");
    return out;
}

Placement attach_leaves_fixed(const Graph& g, const std::vector<int>& leaves, const Placement& base) {
    const int k = base.k;
    const int n = g.order();
    const int nr = n - static_cast<int>(leaves.size());
    std::vector<int> keep_map;
    Graph reduced = g.removed(leaves, &keep_map);
    if (base.n_host != nr || base.domain_size() != nr)
        throw std::invalid_argument("attach_leaves_fixed: base must place g-U in K_{n-|U|}");
    std::vector<int> old_to_new(n, -1);
    for (size_t j = 0; j < keep_map.size(); ++j) old_to_new[keep_map[j]] = static_cast<int>(j);
    for (int leaf : leaves) {
        if (g.degree(leaf) != 1) throw std::invalid_argument("attach_leaves_fixed: not a leaf");
        int x = g.neighbors(leaf)[0];
        if (old_to_new[x] < 0)
            throw std::invalid_argument("attach_leaves_fixed: adjacent leaves");
        if (vertex_status(base, old_to_new[x]) != VertexStatus::Placed)
            throw std::invalid_argument("attach_leaves_fixed: leaf neighbor not k-placed");
    }
    Placement out{k, n, std::vector<std::vector<int>>(k, std::vector<int>(n))};
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < nr; ++j) out.maps[i][keep_map[j]] = base.maps[i][j];
        for (size_t m = 0; m < leaves.size(); ++m) out.maps[i][leaves[m]] = nr + static_cast<int>(m);
    }
    check_verified(g, out, "attach_leaves_fixed");
    return out;
}

void BlockAssembly::add_block(const std::vector<int>& g_vertices, const Placement& local) {
    if (local.k != k_) throw std::invalid_argument("assembly: copy count mismatch");
    if (static_cast<int>(g_vertices.size()) != local.domain_size())
        throw std::invalid_argument("assembly: block size mismatch");
    for (int i = 0; i < k_; ++i)
        for (size_t j = 0; j < g_vertices.size(); ++j) {
            int& slot = maps_[i][g_vertices[j]];
            if (slot >= 0) throw std::invalid_argument("assembly: vertex covered twice");
            slot = next_host_ + local.maps[i][j];
        }
    next_host_ += local.n_host;
}

int BlockAssembly::add_fixed(int g_vertex) {
    for (int i = 0; i < k_; ++i) {
        int& slot = maps_[i][g_vertex];
        if (slot >= 0) throw std::invalid_argument("assembly: vertex covered twice");
        slot = next_host_;
    }
    return next_host_++;
}

Placement BlockAssembly::finish() const {
    for (const auto& m : maps_)
        for (int h : m)
            if (h < 0) throw std::logic_error("assembly: uncovered vertex");
    return Placement{k_, next_host_, maps_};
}

Placement compose_structure(const ABPartition& part) {
    if (!part.g) throw std::invalid_argument("compose_structure: missing graph");
    const Graph& g = *part.g;
    const int n = g.order();
    const int k = part.phi_a.k;
    if (part.phi_b.k != k) throw std::invalid_argument("compose_structure: copy count mismatch");

    std::vector<int> where(n, -1);  // 0 = A, 1 = B
    for (int v : part.a_verts) where.at(v) = 0;
    for (int v : part.b_verts) {
        if (where.at(v) != -1) throw std::invalid_argument("compose_structure: A and B overlap");
        where[v] = 1;
    }
    std::vector<char> in_u(n, 0);
    int u_in_a = 0, u_in_b = 0, u_out = 0;
    for (int v : part.u_verts) {
        in_u.at(v) = 1;
        if (where[v] == 0) ++u_in_a;
        else if (where[v] == 1) ++u_in_b;
        else ++u_out;
    }
    if (u_in_a && u_in_b)
        throw std::invalid_argument("compose_structure: U must lie in one side");
    if (u_out && (u_in_a || u_in_b))
        throw std::invalid_argument("compose_structure: U split between a side and outside");
    for (int v = 0; v < n; ++v)
        if (where[v] < 0 && !in_u[v])
            throw std::invalid_argument("compose_structure: not a partition of V(G)");
    // U independent
    for (const auto& [x, y] : g.edges())
        if (in_u[x] && in_u[y])
            throw std::invalid_argument("compose_structure: U is not independent");

    const bool u_separate = u_out > 0 || part.u_verts.empty();

    // condition (i): at most one vertex of A-U with neighbors in B-U
    std::optional<int> detected_a;
    for (const auto& [x, y] : g.edges()) {
        int a = -1, b = -1;
        if (where[x] == 0 && where[y] == 1) a = x, b = y;
        else if (where[y] == 0 && where[x] == 1) a = y, b = x;
        else continue;
        if (in_u[a] || in_u[b]) continue;
        if (detected_a && *detected_a != a)
            throw std::invalid_argument("compose_structure: condition (i) violated: "
                                        "two A-vertices with neighbors in B");
        detected_a = a;
    }
    if (part.a_vertex && detected_a && *part.a_vertex != *detected_a)
        throw std::invalid_argument("compose_structure: declared vertex a does not match edges");
    std::optional<int> a_vert = part.a_vertex ? part.a_vertex : detected_a;

    // per-u neighbor bounds from condition (i)
    for (int u : part.u_verts) {
        int na = 0, nb = 0;
        for (int w : g.neighbors(u)) {
            if (where[w] == 0 && !in_u[w]) ++na;
            if (where[w] == 1 && !in_u[w]) ++nb;
        }
        if (u_in_a == 0 && na > 1)
            throw std::invalid_argument("compose_structure: condition (i): |N_A(u)| > 1");
        if (u_in_b == 0 && nb > 1)
            throw std::invalid_argument("compose_structure: condition (i): |N_B(u)| > 1");
    }

    // positions within the supplied placements
    std::vector<int> pos(n, -1);
    for (size_t j = 0; j < part.a_verts.size(); ++j) pos[part.a_verts[j]] = static_cast<int>(j);
    for (size_t j = 0; j < part.b_verts.size(); ++j) pos[part.b_verts[j]] = static_cast<int>(j);

    {
        auto repa = verify(g.induced(part.a_verts), part.phi_a);
        if (!repa.ok) throw std::invalid_argument("compose_structure: phi_a invalid");
        auto repb = verify(g.induced(part.b_verts), part.phi_b);
        if (!repb.ok) throw std::invalid_argument("compose_structure: phi_b invalid");
    }
    auto status_of = [&](int v) {
        if (where[v] == 0) return vertex_status(part.phi_a, pos[v]);
        if (where[v] == 1) return vertex_status(part.phi_b, pos[v]);
        return VertexStatus::Fixed;  // U outside both blocks is pinned below
    };
    // condition (ii)
    if (a_vert && status_of(*a_vert) != VertexStatus::Placed)
        throw std::invalid_argument("compose_structure: condition (ii): vertex a not k-placed");
    for (int u : part.u_verts) {
        if (status_of(u) != VertexStatus::Fixed)
            throw std::invalid_argument("compose_structure: condition (ii): u not k-fixed");
        for (int w : g.neighbors(u))
            if (status_of(w) != VertexStatus::Placed)
                throw std::invalid_argument("compose_structure: condition (ii): "
                                            "neighbor of U not k-placed");
    }

    BlockAssembly blocks(k, n);
    blocks.add_block(part.a_verts, part.phi_a);
    if (u_separate)
        for (int u : part.u_verts) blocks.add_fixed(u);
    blocks.add_block(part.b_verts, part.phi_b);
    Placement out = blocks.finish();
    check_verified(g, out, "compose_structure");
    return out;
}

MaxDeg2Result pack_max_degree_two(const Graph& g, int k) {
    if (g.max_degree() > 2)
        throw std::invalid_argument("pack_max_degree_two: max degree > 2");
    if (k < 1) throw std::invalid_argument("pack_max_degree_two: k >= 1");
    const int n = g.order();
    MaxDeg2Result res;
    if (static_cast<long long>(k) * g.size() > static_cast<long long>(n) * (n - 1) / 2) return res;

    // single long cycle: the rotational scheme is immediate
    if (g.connected() && g.size() == n && n >= 2 * k + 1) {
        std::vector<int> seq{0};
        int prev = 0, cur = g.neighbors(0)[0];
        while (cur != 0) {
            seq.push_back(cur);
            int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
            prev = cur;
            cur = nxt;
        }
        Placement cp = cycle_placement(n, k);
        Placement out{k, n, std::vector<std::vector<int>>(k, std::vector<int>(n))};
        for (int i = 0; i < k; ++i)
            for (int p = 0; p < n; ++p) out.maps[i][seq[p]] = cp.maps[i][p];
        check_verified(g, out, "pack_max_degree_two");
        return {true, out};
    }

    // iterated embedding: each copy is embedded into the complement of the
    // edges used so far; a complete within-copy backtracking suffices for
    // n >= 6k-4 since the host minimum degree stays above (2n-1)/3
    std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
    std::vector<int> used_deg(n, 0);

    // vertex sequence: cycles by decreasing length, then paths by decreasing
    // length, isolated vertices last; within a component, walk order
    std::vector<std::vector<int>> comps = g.components();
    std::vector<std::pair<std::pair<int, int>, std::vector<int>>> ordered;
    for (const auto& comp : comps) {
        Graph c = g.induced(comp);
        bool cyc = c.size() == static_cast<int>(comp.size()) && c.size() > 0;
        std::vector<int> walk;
        if (comp.size() == 1) {
            walk = comp;
        } else {
            int start = 0;
            if (!cyc)
                for (size_t j = 0; j < comp.size(); ++j)
                    if (c.degree(static_cast<int>(j)) == 1) { start = static_cast<int>(j); break; }
            walk.push_back(start);
            int prev = -1, cur = start;
            while (static_cast<int>(walk.size()) < static_cast<int>(comp.size())) {
                int nxt = -1;
                for (int w : c.neighbors(cur))
                    if (w != prev) { nxt = w; break; }
                if (nxt < 0) break;
                walk.push_back(nxt);
                prev = cur;
                cur = nxt;
            }
            for (auto& v : walk) v = comp[v];
        }
        ordered.push_back({{cyc ? 0 : 1, -static_cast<int>(comp.size())}, walk});
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<int> seq;
    for (auto& [key, walk] : ordered) seq.insert(seq.end(), walk.begin(), walk.end());

    Placement out{k, n, std::vector<std::vector<int>>(k, std::vector<int>(n))};
    std::vector<int> img(n, -1);
    std::vector<char> host_busy(n, 0);

    // complete backtracking for one copy
    auto embed_copy = [&](auto&& self, size_t idx) -> bool {
        if (idx == seq.size()) return true;
        int v = seq[idx];
        std::vector<int> placed_nbrs;
        for (int w : g.neighbors(v))
            if (img[w] >= 0) placed_nbrs.push_back(img[w]);
        std::vector<int> cands;
        for (int h = 0; h < n; ++h) {
            if (host_busy[h]) continue;
            bool ok = true;
            for (int hw : placed_nbrs)
                if (used[h][hw]) { ok = false; break; }
            if (ok) cands.push_back(h);
        }
        // increasing remaining degree == decreasing used degree
        std::stable_sort(cands.begin(), cands.end(),
                         [&](int a, int b) { return used_deg[a] > used_deg[b]; });
        for (int h : cands) {
            img[v] = h;
            host_busy[h] = 1;
            for (int hw : placed_nbrs) {
                used[h][hw] = used[hw][h] = 1;
                ++used_deg[h];
                ++used_deg[hw];
            }
            if (self(self, idx + 1)) return true;
            for (int hw : placed_nbrs) {
                used[h][hw] = used[hw][h] = 0;
                --used_deg[h];
                --used_deg[hw];
            }
            host_busy[h] = 0;
            img[v] = -1;
        }
        return false;
    };

    for (int c = 0; c < k; ++c) {
        std::fill(img.begin(), img.end(), -1);
        std::fill(host_busy.begin(), host_busy.end(), 0);
        if (!embed_copy(embed_copy, 0)) return res;  // unknown
        for (int v = 0; v < n; ++v) out.maps[c][v] = img[v];
    }
    check_verified(g, out, "pack_max_degree_two");
    return {true, out};
}

namespace {

// Labels a connected (v,v+1)-graph with min degree 2 as a double lasso:
// seq[p] = vertex at path position p+1, plus the chord cycle lengths (s, t).
struct DoubleLassoLabeling {
    std::vector<int> seq;
    int s = 0, t = 0;
};

std::optional<DoubleLassoLabeling> double_lasso_labeling(const Graph& g) {
    const int n = g.order();
    if (g.size() != n + 1 || !g.connected() || g.min_degree() < 2) return std::nullopt;
    std::vector<int> deg3, deg4;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 3) deg3.push_back(v);
        else if (g.degree(v) == 4) deg4.push_back(v);
        else if (g.degree(v) != 2) return std::nullopt;
    }
    auto walk_from = [&](int start, int first) {
        std::vector<int> inner;
        int prev = start, cur = first;
        while (g.degree(cur) == 2) {
            inner.push_back(cur);
            int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
            prev = cur;
            cur = nxt;
        }
        return std::make_pair(inner, cur);
    };
    DoubleLassoLabeling lab;
    if (deg4.size() == 1 && deg3.empty()) {
        // figure-eight at w: two cycles, each met once from both directions
        int w = deg4[0];
        auto nb = g.neighbors(w);
        std::vector<char> consumed(nb.size(), 0);
        std::vector<std::vector<int>> cycles;
        for (size_t a = 0; a < nb.size(); ++a) {
            if (consumed[a]) continue;
            auto [inner, end] = walk_from(w, nb[a]);
            if (end != w || inner.size() < 2) return std::nullopt;
            consumed[a] = 1;
            for (size_t b2 = a + 1; b2 < nb.size(); ++b2)
                if (!consumed[b2] && nb[b2] == inner.back()) {
                    consumed[b2] = 1;
                    break;
                }
            cycles.push_back(inner);
        }
        if (cycles.size() != 2) return std::nullopt;
        const auto& c1 = cycles[0];
        const auto& c2 = cycles[1];
        lab.s = static_cast<int>(c1.size()) + 1;
        lab.t = static_cast<int>(c2.size()) + 1;
        lab.seq = c1;                       // v_1..v_{s-1}
        lab.seq.push_back(w);               // v_s
        lab.seq.insert(lab.seq.end(), c2.begin(), c2.end());  // v_{s+1}..v_l
        return lab;
    }
    if (deg3.size() == 2 && deg4.empty()) {
        int x = deg3[0], y = deg3[1];
        std::vector<std::vector<int>> to_y;  // inner vertices of x->y paths
        std::vector<int> cycle_x;            // inner vertices of a cycle at x
        for (int w : g.neighbors(x)) {
            auto [inner, end] = walk_from(x, w);
            if (end == y) to_y.push_back(inner);
            else if (end == x) cycle_x = inner;
            else return std::nullopt;
        }
        if (to_y.size() == 3) {
            // theta: order paths by decreasing edge length, use the longest as
            // the shared middle segment
            std::sort(to_y.begin(), to_y.end(),
                      [](const auto& a, const auto& b) { return a.size() > b.size(); });
            auto &p = to_y[0], &q = to_y[1], &r = to_y[2];
            int pe = static_cast<int>(p.size()) + 1, qe = static_cast<int>(q.size()) + 1,
                re = static_cast<int>(r.size()) + 1;
            lab.s = pe + qe;
            lab.t = pe + re;
            lab.seq = q;  // from x's neighbor to y's neighbor
            lab.seq.push_back(y);
            lab.seq.insert(lab.seq.end(), p.rbegin(), p.rend());
            lab.seq.push_back(x);
            lab.seq.insert(lab.seq.end(), r.begin(), r.end());
            return lab;
        }
        if (to_y.size() == 1 && !cycle_x.empty()) {
            // dumbbell
            std::vector<int> cycle_y;
            std::vector<int> bridge = to_y[0];
            for (int w : g.neighbors(y)) {
                auto [inner, end] = walk_from(y, w);
                if (end == y) { cycle_y = inner; break; }
            }
            if (cycle_y.empty()) return std::nullopt;
            lab.s = static_cast<int>(cycle_x.size()) + 1;
            lab.t = static_cast<int>(cycle_y.size()) + 1;
            lab.seq = cycle_x;
            lab.seq.push_back(x);
            lab.seq.insert(lab.seq.end(), bridge.begin(), bridge.end());
            lab.seq.push_back(y);
            lab.seq.insert(lab.seq.end(), cycle_y.begin(), cycle_y.end());
            return lab;
        }
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

Placement pack_n_plus_one(const Graph& g, int k) {
    if (k < 4) throw std::invalid_argument("pack_n_plus_one: k >= 4");
    if (g.size() != g.order() + 1)
        throw std::invalid_argument("pack_n_plus_one: not an (n,n+1)-graph");
    if (g.min_degree() < 2) throw std::invalid_argument("pack_n_plus_one: min degree >= 2");
    auto gi = g.girth();
    if (!gi || *gi < 2 * k + 1)
        throw std::invalid_argument("pack_n_plus_one: girth >= 2k+1 required");

    BlockAssembly blocks(k, g.order());
    for (const auto& comp : g.components()) {
        Graph c = g.induced(comp);
        if (c.size() == c.order()) {
            // cycle component
            std::vector<int> seq{comp[0]};
            int prev0 = 0, cur = c.neighbors(0)[0];
            while (cur != 0) {
                seq.push_back(comp[cur]);
                int nxt = c.neighbors(cur)[0] == prev0 ? c.neighbors(cur)[1] : c.neighbors(cur)[0];
                prev0 = cur;
                cur = nxt;
            }
            blocks.add_block(seq, cycle_placement(c.order(), k));
        } else {
            auto lab = double_lasso_labeling(c);
            if (!lab)
                throw std::invalid_argument("pack_n_plus_one: component is not a cycle or double lasso");
            std::vector<int> seq;
            for (int v : lab->seq) seq.push_back(comp[v]);
            blocks.add_block(seq, double_lasso_placement(c.order(), lab->s, lab->t, k));
        }
    }
    Placement out = blocks.finish();
    check_verified(g, out, "pack_n_plus_one");
    return out;
}

}  // namespace gpack
