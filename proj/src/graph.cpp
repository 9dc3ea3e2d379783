#include "gpack/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace gpack {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative order");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("graph: loop edge");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph: vertex out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("graph: parallel edge");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    return adj_.at(v);
}

int Graph::degree(int v) const {
    return static_cast<int>(adj_.at(v).size());
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (const auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& a = adj_.at(u);
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<int> comp(n_, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        std::vector<int> verts;
        std::deque<int> queue{s};
        comp[s] = id;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            verts.push_back(v);
            for (int w : adj_[v])
                if (comp[w] < 0) {
                    comp[w] = id;
                    queue.push_back(w);
                }
        }
        std::sort(verts.begin(), verts.end());
        out.push_back(std::move(verts));
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    return out;
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    return components().size() == 1;
}

bool Graph::is_forest() const {
    return !girth().has_value();
}

std::vector<int> Graph::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (degree(v) == 1) out.push_back(v);
    return out;
}

std::vector<int> Graph::nodes() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v) {
        if (degree(v) < 2) continue;
        for (int w : adj_[v])
            if (degree(w) == 1) {
                out.push_back(v);
                break;
            }
    }
    return out;
}

std::optional<int> Graph::girth() const {
    // BFS from every vertex; a non-tree edge at depths (d1, d2) witnesses a
    // cycle of length d1 + d2 + 1 through the root.
    int best = -1;
    std::vector<int> dist(n_), parent(n_);
    for (int s = 0; s < n_; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : adj_[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (w != parent[v]) {
                    int len = dist[v] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

Graph Graph::induced(const std::vector<int>& verts) const {
    std::vector<int> pos(n_, -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
        if (pos[verts[i]] >= 0) throw std::invalid_argument("induced: duplicate vertex");
        pos[verts[i]] = i;
    }
    std::vector<Edge> es;
    for (const auto& [u, v] : edges_)
        if (pos[u] >= 0 && pos[v] >= 0)
            es.emplace_back(std::min(pos[u], pos[v]), std::max(pos[u], pos[v]));
    return Graph(static_cast<int>(verts.size()), std::move(es));
}

Graph Graph::removed(const std::vector<int>& verts, std::vector<int>* out_map) const {
    std::vector<char> drop(n_, 0);
    for (int v : verts) drop.at(v) = 1;
    std::vector<int> keep;
    for (int v = 0; v < n_; ++v)
        if (!drop[v]) keep.push_back(v);
    if (out_map) *out_map = keep;
    return induced(keep);
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (const auto& [u, v] : edges_)
        es.emplace_back(perm.at(u), perm.at(v));
    return Graph(n_, std::move(es));
}

Graph Graph::with_edge(int u, int v) const {
    auto es = edges_;
    es.emplace_back(u, v);
    return Graph(n_, std::move(es));
}

Graph Graph::without_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto es = edges_;
    auto it = std::find(es.begin(), es.end(), Edge{u, v});
    if (it == es.end()) throw std::invalid_argument("without_edge: not present");
    es.erase(it);
    return Graph(n_, std::move(es));
}

Graph path_graph(int t) {
    if (t < 1) throw std::invalid_argument("path_graph: t >= 1");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < t; ++i) es.emplace_back(i, i + 1);
    return Graph(t, std::move(es));
}

Graph cycle_graph(int l) {
    if (l < 3) throw std::invalid_argument("cycle_graph: l >= 3");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < l; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(0, l - 1);
    return Graph(l, std::move(es));
}

Graph star_graph(int n) {
    if (n < 2) throw std::invalid_argument("star_graph: n >= 2");
    std::vector<Edge> es;
    for (int i = 1; i < n; ++i) es.emplace_back(0, i);
    return Graph(n, std::move(es));
}

Graph inserted_star_graph(int a, int b) {
    // S_a with b vertices inserted into one edge: center 0 keeps a-2 leaves
    // and one pendant path of b+1 vertices. Order a+b.
    if (a < 3 || b < 1) throw std::invalid_argument("inserted_star_graph: a >= 3, b >= 1");
    std::vector<int> legs(static_cast<size_t>(a - 2), 1);
    legs.push_back(b + 1);
    return spider_graph(legs);
}

Graph lasso_graph(int l, int s) {
    if (!(3 <= s && s <= l)) throw std::invalid_argument("lasso_graph: need 3 <= s <= l");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < l; ++i) es.emplace_back(i, i + 1);
    if (s < l) es.emplace_back(0, s - 1);
    else es.emplace_back(0, l - 1);  // L(l,l) is the cycle C_l
    return Graph(l, std::move(es));
}

Graph double_lasso_graph(int l, int s, int t) {
    if (!(3 <= s && s <= l && 3 <= t && t < l))
        throw std::invalid_argument("double_lasso_graph: need 3 <= s <= l, 3 <= t < l");
    Graph g = lasso_graph(l, s);
    int a = l - 1, b = l - t;  // v_l and v_{l-t+1}, 0-based
    if (g.has_edge(a, b)) throw std::invalid_argument("double_lasso_graph: chords coincide");
    return g.with_edge(a, b);
}

Graph spider_graph(const std::vector<int>& legs) {
    if (legs.empty()) throw std::invalid_argument("spider_graph: no legs");
    std::vector<Edge> es;
    int next = 1;
    for (int len : legs) {
        if (len < 1) throw std::invalid_argument("spider_graph: leg length >= 1");
        es.emplace_back(0, next);
        for (int j = 1; j < len; ++j) es.emplace_back(next + j - 1, next + j);
        next += len;
    }
    return Graph(next, std::move(es));
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    int n = 0;
    std::vector<Edge> es;
    for (const auto& g : parts) {
        for (const auto& [u, v] : g.edges()) es.emplace_back(n + u, n + v);
        n += g.order();
    }
    return Graph(n, std::move(es));
}

}  // namespace gpack
