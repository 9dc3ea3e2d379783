#pragma once

#include <string>

#include "gpack/placement.hpp"
#include "gpack/wcatalog.hpp"

namespace gpack {

// Resolves the data directory: $PACKLIB_DATA_DIR if set, else the directory
// baked in at build time. Fixture tables live under <dir>/fixtures/v1.
std::string data_dir();

// Stored dispersed 4-placement of P_a (+) P_b (+) K_1 for 3 <= a+b <= 6,
// a <= b. Vertex order: P_a, then P_b, then the isolated vertex.
Placement load_small_union_fixture(int a, int b);

// Stored dispersed 4-placements of Q(2,2,3) (host K_8) and Q(2,2,2,2)
// (host K_9), spider_graph vertex numbering.
Placement load_spider_fixture_q223();
Placement load_spider_fixture_q2222();

// Shipped derive_w output used by pack4's exception check.
const WCatalog& default_w_catalog();

}  // namespace gpack
