#pragma once

#include <string>
#include <vector>

#include "gpack/graph.hpp"

namespace gpack {

// Structural tag for one connected graph. Parameters follow the usual
// conventions: Path(t), Cycle(l), Star(n) of order n, InsertedStar(a,b) for
// S_a^b, Lasso(l,s), DoubleLasso(l,s,t) with s >= t, Spider(n_1<=...<=n_t).
enum class GraphTag {
    Path,
    Cycle,
    Star,
    InsertedStar,
    Lasso,
    DoubleLasso,
    Spider,
    GenericTree,
    Unicyclic,
    Bicyclic,
    Other,
};

struct GraphClass {
    GraphTag tag;
    std::vector<int> params;

    bool operator==(const GraphClass& o) const { return tag == o.tag && params == o.params; }
    std::string to_string() const;
};

// Most specific tag for a connected graph.
GraphClass classify_connected(const Graph& g);

// One tag per component, in components() order.
std::vector<GraphClass> classify(const Graph& g);

// Builds a representative of the class; inverse of classify_connected for the
// parameterized tags (throws for GenericTree/Unicyclic/Bicyclic/Other).
Graph realize(const GraphClass& c);

}  // namespace gpack
