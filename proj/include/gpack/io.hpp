#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "gpack/graph.hpp"

namespace gpack {

enum class GraphFormat { Auto, EdgeList, Graph6 };

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Edge-list text: one `u v` pair per line, arbitrary nonnegative labels,
// optional `n=<count>` header declaring the vertex count (needed for isolated
// vertices). '#' starts a comment. Labels are compacted to 0..n-1 in
// increasing order; with an n= header, labels must already be 0..n-1.
Graph parse_edge_list(std::istream& in);

// Auto mode: a first non-comment line starting with a digit or 'n' is an edge
// list, anything else is graph6.
Graph parse_graph(std::istream& in, GraphFormat format = GraphFormat::Auto);
Graph parse_graph_file(const std::string& path, GraphFormat format = GraphFormat::Auto);

}  // namespace gpack
