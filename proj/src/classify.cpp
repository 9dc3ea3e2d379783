#include "gpack/classify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gpack {
namespace {

const char* tag_name(GraphTag t) {
    switch (t) {
        case GraphTag::Path: return "Path";
        case GraphTag::Cycle: return "Cycle";
        case GraphTag::Star: return "Star";
        case GraphTag::InsertedStar: return "InsertedStar";
        case GraphTag::Lasso: return "Lasso";
        case GraphTag::DoubleLasso: return "DoubleLasso";
        case GraphTag::Spider: return "Spider";
        case GraphTag::GenericTree: return "GenericTree";
        case GraphTag::Unicyclic: return "Unicyclic";
        case GraphTag::Bicyclic: return "Bicyclic";
        case GraphTag::Other: return "Other";
    }
    return "?";
}

// Walks from `start` in the direction of `first` until reaching a vertex of
// degree != 2 (or looping back); returns the inner vertices visited plus the
// terminal vertex.
std::pair<std::vector<int>, int> walk_path(const Graph& g, int start, int first) {
    std::vector<int> inner;
    int prev = start, cur = first;
    while (g.degree(cur) == 2 && cur != start) {
        inner.push_back(cur);
        int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
        prev = cur;
        cur = nxt;
    }
    return {inner, cur};
}

GraphClass classify_tree(const Graph& g) {
    const int n = g.order();
    if (g.max_degree() <= 2) return {GraphTag::Path, {n}};
    std::vector<int> branch;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 3) branch.push_back(v);
    if (branch.size() != 1) return {GraphTag::GenericTree, {n}};
    int c = branch[0];
    std::vector<int> legs;
    for (int w : g.neighbors(c)) {
        auto [inner, end] = walk_path(g, c, w);
        if (g.degree(end) != 1) return {GraphTag::GenericTree, {n}};  // cannot happen in a tree
        legs.push_back(static_cast<int>(inner.size()) + 1);
    }
    std::sort(legs.begin(), legs.end());
    if (legs.back() == 1) return {GraphTag::Star, {n}};
    int long_legs = static_cast<int>(std::count_if(legs.begin(), legs.end(), [](int l) { return l > 1; }));
    if (long_legs == 1 && legs.size() >= 2)
        return {GraphTag::InsertedStar, {static_cast<int>(legs.size()) + 1, legs.back() - 1}};
    return {GraphTag::Spider, legs};
}

GraphClass classify_unicyclic(const Graph& g) {
    const int n = g.order();
    if (g.max_degree() == 2) return {GraphTag::Cycle, {n}};
    std::vector<int> deg3, deg_other;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 3) deg3.push_back(v);
        else if (g.degree(v) != 2 && g.degree(v) != 1) deg_other.push_back(v);
    }
    int leaf_count = static_cast<int>(g.leaves().size());
    if (deg3.size() == 1 && deg_other.empty() && leaf_count == 1) {
        int s = g.girth().value();
        return {GraphTag::Lasso, {n, s}};
    }
    return {GraphTag::Unicyclic, {n}};
}

GraphClass classify_bicyclic(const Graph& g) {
    const int n = g.order();
    std::vector<int> deg3, deg4;
    bool clean = true;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 3) deg3.push_back(v);
        else if (g.degree(v) == 4) deg4.push_back(v);
        else if (g.degree(v) != 2) clean = false;
    }
    if (clean && deg4.size() == 1 && deg3.empty()) {
        // figure-eight: two cycles sharing the degree-4 vertex
        auto comps = g.removed({deg4[0]}).components();
        if (comps.size() == 2) {
            int s = static_cast<int>(comps[0].size()) + 1;
            int t = static_cast<int>(comps[1].size()) + 1;
            if (s < t) std::swap(s, t);
            return {GraphTag::DoubleLasso, {n, s, t}};
        }
    }
    if (clean && deg3.size() == 2 && deg4.empty()) {
        int x = deg3[0], y = deg3[1];
        std::vector<int> seg;  // edge-lengths of maximal deg-2 paths out of x
        bool theta = true;
        int cycle_at_x = -1, cycle_at_y = -1;
        for (int w : g.neighbors(x)) {
            auto [inner, end] = walk_path(g, x, w);
            int len = static_cast<int>(inner.size()) + 1;
            if (end == y) seg.push_back(len);
            else if (end == x) { theta = false; cycle_at_x = len; }
            else return {GraphTag::Bicyclic, {n}};
        }
        if (theta && seg.size() == 3) {
            std::sort(seg.begin(), seg.end(), std::greater<int>());
            int a = seg[0], b = seg[1], c = seg[2];
            return {GraphTag::DoubleLasso, {n, a + b, a + c}};  // two largest cycles
        }
        if (!theta) {
            // dumbbell: one cycle at each branch vertex
            for (int w : g.neighbors(y)) {
                auto [inner, end] = walk_path(g, y, w);
                if (end == y) cycle_at_y = static_cast<int>(inner.size()) + 1;
            }
            if (cycle_at_x > 0 && cycle_at_y > 0) {
                int s = cycle_at_x, t = cycle_at_y;
                if (s < t) std::swap(s, t);
                return {GraphTag::DoubleLasso, {n, s, t}};
            }
        }
    }
    return {GraphTag::Bicyclic, {n}};
}

}  // namespace

std::string GraphClass::to_string() const {
    std::ostringstream os;
    os << tag_name(tag) << '(';
    for (size_t i = 0; i < params.size(); ++i) {
        if (i) os << ',';
        os << params[i];
    }
    os << ')';
    return os.str();
}

GraphClass classify_connected(const Graph& g) {
    const int n = g.order();
    if (n == 0) return {GraphTag::Other, {}};
    const int e = g.size();
    if (e == n - 1) return classify_tree(g);
    if (e == n) return classify_unicyclic(g);
    if (e == n + 1) return classify_bicyclic(g);
    return {GraphTag::Other, {n}};
}

std::vector<GraphClass> classify(const Graph& g) {
    std::vector<GraphClass> out;
    for (const auto& comp : g.components())
        out.push_back(classify_connected(g.induced(comp)));
    return out;
}

Graph realize(const GraphClass& c) {
    const auto& p = c.params;
    switch (c.tag) {
        case GraphTag::Path: return path_graph(p.at(0));
        case GraphTag::Cycle: return cycle_graph(p.at(0));
        case GraphTag::Star: return star_graph(p.at(0));
        case GraphTag::InsertedStar: return inserted_star_graph(p.at(0), p.at(1));
        case GraphTag::Lasso: return lasso_graph(p.at(0), p.at(1));
        case GraphTag::DoubleLasso: {
            // params are (l, s, t) with s,t the two largest chord cycles
            int l = p.at(0), s = p.at(1), t = p.at(2);
            return double_lasso_graph(l, s, t);
        }
        case GraphTag::Spider: return spider_graph(p);
        default:
            throw std::invalid_argument("realize: tag has no canonical representative");
    }
}

}  // namespace gpack
