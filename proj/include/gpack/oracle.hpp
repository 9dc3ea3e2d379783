#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gpack/graph.hpp"
#include "gpack/placement.hpp"
#include "gpack/wcatalog.hpp"

namespace gpack {

struct SearchBudget {
    std::uint64_t node_limit = 200'000'000;
    double time_limit_s = 0.0;      // 0 = unlimited
    bool symmetry_breaking = true;
};

enum class SearchVerdict { Found, Impossible, Unknown };

struct SearchOptions {
    bool require_dispersed = false;
    std::vector<int> must_place;    // vertices required to be k-placed
};

struct SearchResult {
    SearchVerdict verdict = SearchVerdict::Unknown;
    std::optional<Placement> placement;
    std::uint64_t nodes = 0;
    bool complete = false;          // search space exhausted within budget
};

// Complete backtracking search for a k-placement of g into K_{v(g)},
// copy by copy, vertices in decreasing-degree order. Impossible is reported
// only on full exhaustion. Symmetry breaking fixes phi_1 to the identity on a
// canonical labeling and orders copies 2..k lexicographically.
SearchResult brute_force_pack(const Graph& g, int k, const SearchBudget& budget = {},
                              const SearchOptions& opts = {});

struct FamilyFilter {
    int girth_min = 0;        // forests satisfy any bound
    int max_degree = 0;       // 0 = unconstrained
    bool connected_only = false;
    bool exact_edges = false; // keep only graphs with exactly max_edges edges
};

// Every isomorphism class on n vertices with at most max_edges edges, as
// canonical representatives in deterministic order. Built-in enumeration is
// meant for small n (the growth is level-wise with canonical dedup).
std::vector<Graph> enumerate_family(int n, int max_edges, const FamilyFilter& filter = {});

// All trees on n vertices, one per isomorphism class.
std::vector<Graph> enumerate_trees(int n);

struct CensusResult {
    std::vector<Graph> exceptions;   // canonical forms, sorted by graph6
    int unknown = 0;
    int total = 0;
    bool complete() const { return unknown == 0; }
};

// Exception list: members of the family that are not k-placeable.
CensusResult census(int n, int max_edges, int k, const FamilyFilter& filter = {},
                    const SearchBudget& budget = {}, int jobs = 1);

// All trees with 8 <= order <= max_order, max degree <= order-4, that are not
// 4-placeable; every member is certified by a completed search. Throws if any
// verdict within the range is Unknown.
WCatalog derive_w(int max_order, const SearchBudget& budget = {});

}  // namespace gpack
