#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gpack/graph.hpp"
#include "gpack/oracle.hpp"
#include "gpack/placement.hpp"
#include "gpack/wcatalog.hpp"

namespace gpack {

enum class RefusalReason {
    MaxDegreeTooHigh,
    TooSmall,
    ExceptionW,
    ParityObstruction,
    OutsideTheoremScope,
    SearchExhausted,
};

const char* refusal_name(RefusalReason r);

// Result of the 4-placement decision procedure. Placements are always
// verified before being returned; refusals carry the dispatch trace.
struct PackOutcome {
    std::optional<Placement> placement;
    std::optional<RefusalReason> refusal;
    std::vector<std::string> trace;

    bool ok() const { return placement.has_value(); }
};

// Leaf deletion with the reduction priorities: components are first reduced
// to lassos where a set of leaves allows it (tail length maximal), and
// otherwise each vertex keeps one leaf exactly when it has exactly one
// non-leaf neighbour.
struct LeafDeletionRecord {
    Graph original;
    Graph reduced;                                // G'
    std::vector<int> kept_map;                    // reduced id -> original id
    std::vector<std::pair<int, int>> deleted;     // (leaf, neighbour), original ids
    std::map<int, int> b_values;                  // original id -> b_u where leaves were seen
};

LeafDeletionRecord delete_leaves_priority(const Graph& g);

// Decides 4-placeability of an (n,n-1)-graph with girth >= 9 and produces a
// verified certificate, or a classified refusal. Inputs outside that family
// are refused as OutsideTheoremScope (after the n=8 parity check).
PackOutcome pack4(const Graph& g);
PackOutcome pack4(const Graph& g, const WCatalog& catalog, const SearchBudget& budget);

// Connected case: trees of order >= 8.
PackOutcome tree_pack4(const Graph& t);
PackOutcome tree_pack4(const Graph& t, const WCatalog& catalog, const SearchBudget& budget);

// Disconnected qualifying instances with 10 <= n <= 13: merge into one lasso
// and re-attach. Returns nothing when the shape assumptions fail.
std::optional<Placement> lemma31(const Graph& g);

// At least two tree components.
std::optional<Placement> lemma33(const Graph& g);

// The main case split on the leaf-reduced graph (exactly one tree component).
std::optional<Placement> case2_dispatch(const LeafDeletionRecord& record);

// Partial placement for three consecutive path vertices with degree sequence
// (3,2,2), (3,2,3) or (3,3,3) next to enough isolated vertices: places the
// block M = {isolated vertices} + {u,v,w} against an existing placement of
// H = G - M. Returns the full placement of g.
std::optional<Placement> claim_triple_placement(const Graph& g, const std::vector<int>& isolated,
                                                int u, int v, int w, const Placement& phi_h);

}  // namespace gpack
