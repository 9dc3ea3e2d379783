#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gpack/graph.hpp"

namespace gpack {

// Catalog of the exception trees excluded from 4-placeability, derived by
// complete search up to max_order (see oracle::derive_w). Graphs beyond
// max_order are never reported as members.
struct WCatalog {
    int max_order = 0;
    std::vector<std::string> keys;   // sorted canonical keys
    std::vector<Graph> members;      // canonical representatives, same order

    bool empty() const { return members.empty(); }
};

bool is_w_member(const Graph& g, const WCatalog& catalog);

void save_w_catalog(std::ostream& os, const WCatalog& cat);
WCatalog load_w_catalog(std::istream& is);

}  // namespace gpack
