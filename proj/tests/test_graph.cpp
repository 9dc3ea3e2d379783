#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gpack/classify.hpp"
#include "gpack/graph.hpp"

using namespace gpack;

namespace {

// independent shortest-cycle oracle: for each edge, BFS distance in g minus
// that edge plus one
std::optional<int> girth_by_edge_removal(const Graph& g) {
    int best = -1;
    for (const auto& [u, v] : g.edges()) {
        Graph h = g.without_edge(u, v);
        // BFS distance u..v in h
        std::vector<int> dist(g.order(), -1);
        std::vector<int> queue{u};
        dist[u] = 0;
        for (size_t i = 0; i < queue.size(); ++i) {
            int x = queue[i];
            for (int w : h.neighbors(x))
                if (dist[w] < 0) {
                    dist[w] = dist[x] + 1;
                    queue.push_back(w);
                }
        }
        if (dist[v] >= 0 && (best < 0 || dist[v] + 1 < best)) best = dist[v] + 1;
    }
    if (best < 0) return std::nullopt;
    return best;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

}  // namespace

TEST_CASE("graph invariants: degree sum equals twice the edge count") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        Graph g = random_graph(10, 0.3, rng);
        int sum = 0;
        for (int v = 0; v < g.order(); ++v) sum += g.degree(v);
        CHECK(sum == 2 * g.size());
    }
}

TEST_CASE("girth of named families") {
    CHECK(cycle_graph(9).girth() == 9);
    CHECK_FALSE(path_graph(7).girth().has_value());
    CHECK_FALSE(spider_graph({2, 2, 3}).girth().has_value());
    Graph d = double_lasso_graph(20, 10, 10);
    CHECK(d.girth() == girth_by_edge_removal(d));
}

TEST_CASE("girth agrees with the edge-removal oracle on random graphs") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 60; ++rep) {
        int n = 4 + static_cast<int>(rng() % 7);
        Graph g = random_graph(n, 0.35, rng);
        CHECK(g.girth() == girth_by_edge_removal(g));
    }
}

TEST_CASE("components ordering and sizes") {
    Graph g = disjoint_union({cycle_graph(9), Graph(1, {})});
    auto comps = g.components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() == 9);
    CHECK(comps[1].size() == 1);

    CHECK(cycle_graph(12).components().size() == 1);

    Graph h = disjoint_union({Graph(1, {}), Graph(1, {}), spider_graph({2, 2, 2})});
    auto hc = h.components();
    REQUIRE(hc.size() == 3);
    CHECK(hc[0].size() == 7);
    CHECK(hc[1].size() == 1);
    CHECK(hc[2].size() == 1);
}

TEST_CASE("leaves and nodes") {
    Graph p4 = path_graph(4);
    CHECK(p4.leaves() == std::vector<int>{0, 3});
    CHECK(p4.nodes() == std::vector<int>{1, 2});

    Graph c9 = cycle_graph(9);
    CHECK(c9.leaves().empty());
    CHECK(c9.nodes().empty());

    Graph s5 = star_graph(5);
    CHECK(s5.leaves().size() == 4);
    CHECK(s5.nodes() == std::vector<int>{0});
}

TEST_CASE("induced and removed keep adjacency consistent") {
    Graph g = lasso_graph(12, 9);
    std::vector<int> map;
    Graph r = g.removed({11}, &map);
    CHECK(r.order() == 11);
    CHECK(r.size() == g.size() - 1);
    for (int j = 0; j < r.order(); ++j) CHECK(map[j] == j);
}

TEST_CASE("family builders have the advertised sizes") {
    CHECK(lasso_graph(12, 9).size() == 12);
    CHECK(double_lasso_graph(20, 9, 9).size() == 21);
    CHECK(spider_graph({2, 2, 3}).order() == 8);
    CHECK(spider_graph({2, 2, 3}).size() == 7);
    CHECK(inserted_star_graph(5, 2).order() == 7);
    CHECK(inserted_star_graph(5, 2).size() == 6);
}
