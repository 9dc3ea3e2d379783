#include <doctest.h>

#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "gpack/constructions.hpp"
#include "gpack/graph.hpp"
#include "gpack/placement.hpp"

using namespace gpack;

TEST_CASE("verify accepts the rotational path placement") {
    Placement p = path_placement(8, 4);
    auto rep = verify(path_graph(8), p);
    CHECK(rep.ok);
    CHECK(rep.used_host_edges == 28);  // all of K_8
    CHECK(dispersed(p));
}

TEST_CASE("verify pinpoints identical copies") {
    Graph c9 = cycle_graph(9);
    std::vector<int> ident(9);
    std::iota(ident.begin(), ident.end(), 0);
    Placement p{4, 9, std::vector<std::vector<int>>(4, ident)};
    auto rep = verify(c9, p);
    CHECK_FALSE(rep.ok);
    CHECK(rep.kind == "shared_edge");
    CHECK(rep.copy_i == 1);
    CHECK(rep.copy_j == 2);
    CHECK(rep.graph_edge == Edge{0, 1});  // first edge in iteration order
}

TEST_CASE("verify rejects non-injective and out-of-range maps") {
    Graph p3 = path_graph(3);
    Placement bad{1, 3, {{0, 0, 1}}};
    CHECK(verify(p3, bad).kind == "not_injective");
    Placement oob{1, 3, {{0, 1, 7}}};
    CHECK(verify(p3, oob).kind == "bad_host");
    Placement wrong{1, 3, {{0, 1}}};
    CHECK_THROWS_AS(verify(p3, wrong), std::invalid_argument);
}

TEST_CASE("no claimed 4-placement of C_7+K_1 survives verification") {
    Graph g = disjoint_union({cycle_graph(7), Graph(1, {})});
    std::mt19937 rng(17);
    std::vector<int> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    for (int rep = 0; rep < 500; ++rep) {
        Placement p{4, 8, {}};
        for (int i = 0; i < 4; ++i) {
            std::shuffle(perm.begin(), perm.end(), rng);
            p.maps.push_back(perm);
        }
        CHECK_FALSE(verify(g, p).ok);
    }
}

TEST_CASE("vertex status and dispersedness") {
    Placement path = path_placement(8, 4);
    for (int v = 0; v < 8; ++v) CHECK(vertex_status(path, v) == VertexStatus::Placed);
    CHECK(dispersed(path));

    Placement cyc = cycle_placement(9, 4);
    CHECK(vertex_status(cyc, 0) == VertexStatus::Fixed);
    for (int v = 1; v < 9; ++v) CHECK(vertex_status(cyc, v) == VertexStatus::Placed);
    CHECK_FALSE(dispersed(cyc));

    Placement single{1, 3, {{2, 0, 1}}};
    for (int v = 0; v < 3; ++v) CHECK(vertex_status(single, v) == VertexStatus::Placed);

    CHECK_THROWS_AS(vertex_status(path, 99), std::invalid_argument);
}

TEST_CASE("relabel preserves verification") {
    Graph g = lasso_graph(12, 9);
    Placement p = lasso_placement(12, 9, 4);

    std::vector<int> ident(12);
    std::iota(ident.begin(), ident.end(), 0);
    CHECK(relabel(p, ident) == p);

    // shift into a larger host
    std::vector<int> shift(12);
    for (int i = 0; i < 12; ++i) shift[i] = i + 5;
    Placement q = relabel(p, shift, 20);
    CHECK(verify(g, q).ok);

    // composition of relabelings equals relabeling by the composition
    std::mt19937 rng(4);
    std::vector<int> perm(12);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> comp(12);
    for (int i = 0; i < 12; ++i) comp[i] = perm[i] + 5;
    CHECK(relabel(relabel(p, perm), shift, 20) == relabel(p, comp, 20));

    std::vector<int> collide(12, 3);
    CHECK_THROWS_AS(relabel(p, collide), std::invalid_argument);
}

TEST_CASE("union of edge images counts k*e(G) host edges") {
    std::mt19937 rng(12);
    for (int k : {1, 2, 3, 4}) {
        Placement p = path_placement(2 * k + 2, k);
        std::set<std::pair<int, int>> host_edges;
        Graph g = path_graph(2 * k + 2);
        for (int i = 0; i < k; ++i)
            for (auto [u, v] : g.edges()) {
                int a = p.maps[i][u], b = p.maps[i][v];
                host_edges.insert({std::min(a, b), std::max(a, b)});
            }
        CHECK(static_cast<int>(host_edges.size()) == k * g.size());
    }
}

TEST_CASE("placement text round-trip is bit exact") {
    Placement p = double_lasso_placement(20, 9, 9, 4);
    std::string text = to_text(p);
    Placement back = placement_from_text(text);
    CHECK(back == p);
    CHECK(to_text(back) == text);

    std::istringstream bad("2 4");
    CHECK_THROWS_AS(read_placement(bad), std::invalid_argument);
}
