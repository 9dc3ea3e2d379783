#include <doctest.h>

#include <numeric>
#include <random>

#include "gpack/canonical.hpp"
#include "gpack/graph.hpp"

using namespace gpack;

namespace {

Graph shuffled(const Graph& g, std::mt19937& rng) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return g.relabeled(perm);
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

TEST_CASE("canonical key is invariant under relabeling") {
    std::mt19937 rng(3);
    for (int rep = 0; rep < 80; ++rep) {
        int n = 3 + static_cast<int>(rng() % 8);
        Graph g = random_graph(n, 0.4, rng);
        Graph h = shuffled(g, rng);
        CHECK(canonical_key(g) == canonical_key(h));
    }
}

TEST_CASE("canonical key separates non-isomorphic graphs") {
    CHECK(canonical_key(path_graph(4)) != canonical_key(star_graph(4)));
    CHECK(canonical_key(cycle_graph(6)) !=
          canonical_key(disjoint_union({cycle_graph(3), cycle_graph(3)})));
    CHECK(canonical_key(spider_graph({1, 2, 2})) != canonical_key(spider_graph({1, 1, 3})));
}

TEST_CASE("isomorphism is an equivalence relation on a sample") {
    std::mt19937 rng(5);
    std::vector<Graph> pool;
    for (int rep = 0; rep < 12; ++rep) pool.push_back(random_graph(7, 0.35, rng));
    for (const auto& a : pool) CHECK(is_isomorphic(a, a));  // reflexive
    for (const auto& a : pool)
        for (const auto& b : pool) CHECK(is_isomorphic(a, b) == is_isomorphic(b, a));
    for (const auto& a : pool)
        for (const auto& b : pool)
            for (const auto& c : pool)
                if (is_isomorphic(a, b) && is_isomorphic(b, c)) CHECK(is_isomorphic(a, c));
}

TEST_CASE("canonical permutation actually produces the key graph") {
    std::mt19937 rng(9);
    for (int rep = 0; rep < 20; ++rep) {
        Graph g = random_graph(6 + static_cast<int>(rng() % 4), 0.45, rng);
        auto cf = canonical_form(g);
        Graph canon = g.relabeled(cf.perm);
        CHECK(canonical_key(canon) == cf.key);
        // the canonical graph of the canonical graph is itself
        auto cf2 = canonical_form(canon);
        CHECK(canon.relabeled(cf2.perm) == canon);
    }
}
