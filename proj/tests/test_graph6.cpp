#include <doctest.h>

#include <random>
#include <sstream>

#include "gpack/canonical.hpp"
#include "gpack/graph.hpp"
#include "gpack/graph6.hpp"

using namespace gpack;

TEST_CASE("graph6 encodes known strings") {
    // standard examples: K_4 is "C~", the empty graph on 5 vertices is "D??"
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(to_graph6(k4) == "C~");
    CHECK(to_graph6(Graph(5, {})) == "D??");
    CHECK(to_graph6(path_graph(2)) == "A_");
}

TEST_CASE("graph6 round-trips structure") {
    std::mt19937 rng(21);
    std::bernoulli_distribution coin(0.4);
    for (int rep = 0; rep < 100; ++rep) {
        int n = 1 + static_cast<int>(rng() % 12);
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) es.emplace_back(u, v);
        Graph g(n, std::move(es));
        Graph back = from_graph6(to_graph6(g));
        CHECK(back == g);
    }
}

TEST_CASE("graph6 long form for n > 62") {
    Graph g = path_graph(70);
    Graph back = from_graph6(to_graph6(g));
    CHECK(back == g);
}

TEST_CASE("graph6 stream reader skips headers and comments") {
    std::istringstream in("# comment\n>>header\n" + to_graph6(cycle_graph(5)) + "\n" +
                          to_graph6(path_graph(3)) + "\n");
    auto graphs = read_graph6_stream(in);
    REQUIRE(graphs.size() == 2);
    CHECK(is_isomorphic(graphs[0], cycle_graph(5)));
    CHECK(is_isomorphic(graphs[1], path_graph(3)));
}
