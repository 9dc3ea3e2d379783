#pragma once

#include <string>
#include <vector>

#include "gpack/graph.hpp"

namespace gpack {

// Canonical labeling by color refinement with individualization/backtracking.
// Adequate for the small graphs this library enumerates (n <= ~16).

// perm[old] = new position under the canonical labeling.
struct CanonicalForm {
    std::string key;         // packed upper-triangle adjacency of the relabeled graph
    std::vector<int> perm;
};

CanonicalForm canonical_form(const Graph& g);

// Convenience: just the key.
std::string canonical_key(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace gpack
