#include <doctest.h>

#include "gpack/classify.hpp"
#include "gpack/graph.hpp"

using namespace gpack;

TEST_CASE("classify recognizes the named families") {
    CHECK(classify_connected(path_graph(6)) == GraphClass{GraphTag::Path, {6}});
    CHECK(classify_connected(cycle_graph(9)) == GraphClass{GraphTag::Cycle, {9}});
    CHECK(classify_connected(star_graph(8)) == GraphClass{GraphTag::Star, {8}});
    CHECK(classify_connected(lasso_graph(12, 9)) == GraphClass{GraphTag::Lasso, {12, 9}});
    CHECK(classify_connected(spider_graph({3, 2, 2})) == GraphClass{GraphTag::Spider, {2, 2, 3}});

    // star with one edge subdivided twice
    CHECK(classify_connected(inserted_star_graph(5, 2)) ==
          GraphClass{GraphTag::InsertedStar, {5, 2}});
}

TEST_CASE("cycle is preferred over Lasso(l,l)") {
    CHECK(classify_connected(lasso_graph(9, 9)) == GraphClass{GraphTag::Cycle, {9}});
}

TEST_CASE("double lasso shapes: dumbbell, figure-eight, theta") {
    CHECK(classify_connected(double_lasso_graph(20, 9, 9)) ==
          GraphClass{GraphTag::DoubleLasso, {20, 9, 9}});
    // figure-eight: chords meet, s = n-t+1
    CHECK(classify_connected(double_lasso_graph(17, 9, 9)) ==
          GraphClass{GraphTag::DoubleLasso, {17, 9, 9}});
    // theta: canonical parameters are the two largest cycles
    Graph theta = double_lasso_graph(13, 10, 9);
    auto c = classify_connected(theta);
    CHECK(c.tag == GraphTag::DoubleLasso);
    CHECK(c.params == std::vector<int>{13, 10, 9});
}

TEST_CASE("classify round-trips through realize") {
    std::vector<GraphClass> tags = {
        {GraphTag::Path, {1}},        {GraphTag::Path, {2}},           {GraphTag::Path, {7}},
        {GraphTag::Cycle, {9}},       {GraphTag::Star, {6}},           {GraphTag::InsertedStar, {5, 2}},
        {GraphTag::InsertedStar, {4, 3}}, {GraphTag::Lasso, {12, 9}},  {GraphTag::Lasso, {10, 9}},
        {GraphTag::DoubleLasso, {20, 9, 9}}, {GraphTag::DoubleLasso, {17, 9, 9}},
        {GraphTag::DoubleLasso, {13, 10, 9}}, {GraphTag::Spider, {2, 2, 3}},
        {GraphTag::Spider, {2, 2, 2, 2}},
    };
    for (const auto& tag : tags) {
        Graph g = realize(tag);
        CHECK(classify_connected(g) == tag);
    }
}

TEST_CASE("classification of a multi-component graph follows components order") {
    Graph g = disjoint_union({Graph(1, {}), cycle_graph(9), path_graph(4)});
    auto tags = classify(g);
    REQUIRE(tags.size() == 3);
    CHECK(tags[0] == GraphClass{GraphTag::Cycle, {9}});
    CHECK(tags[1] == GraphClass{GraphTag::Path, {4}});
    CHECK(tags[2] == GraphClass{GraphTag::Path, {1}});
}

TEST_CASE("generic tags for unstructured graphs") {
    // two branch vertices
    Graph t(7, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}, {5, 6}});
    CHECK(classify_connected(t).tag == GraphTag::GenericTree);
    // unicyclic with two tails
    Graph u(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {2, 6}});
    CHECK(classify_connected(u).tag == GraphTag::Unicyclic);
}
