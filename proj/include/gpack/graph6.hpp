#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gpack/graph.hpp"

namespace gpack {

// graph6 encoding (undirected simple graphs, the usual 6-bit packing).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);

// Reads one graph per line; lines starting with '#' or '>' are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace gpack
