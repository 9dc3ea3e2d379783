#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gpack/graph.hpp"

namespace gpack {

// A k-placement certificate: k injective vertex maps from V(G) into the host
// clique K_{n_host}. maps[i][v] is the host image of graph vertex v in copy i.
struct Placement {
    int k = 0;
    int n_host = 0;
    std::vector<std::vector<int>> maps;

    int domain_size() const { return maps.empty() ? 0 : static_cast<int>(maps[0].size()); }
    bool operator==(const Placement& o) const {
        return k == o.k && n_host == o.n_host && maps == o.maps;
    }
};

enum class VertexStatus { Placed, Fixed, Mixed };

// First violation found, if any. Copy indices are 1-based to match the usual
// phi_1..phi_k notation.
struct VerificationReport {
    bool ok = false;
    std::string kind;        // "", "bad_host", "not_injective", "shared_edge"
    int copy_i = 0;
    int copy_j = 0;
    Edge graph_edge{-1, -1};
    Edge host_edge{-1, -1};
    int used_host_edges = 0;

    std::string to_json() const;
};

// Checks all placement invariants for g. A domain/host dimension mismatch is
// a usage error and throws; it is not a failed verification.
VerificationReport verify(const Graph& g, const Placement& p);

VertexStatus vertex_status(const Placement& p, int v);
bool dispersed(const Placement& p);

// Remaps all host images through an injective map into a host of size
// new_n_host (0 keeps the current size; the map must still be injective).
Placement relabel(const Placement& p, const std::vector<int>& host_map, int new_n_host = 0);

// Text format: header "k n_host v(G)", then one line per copy with the host
// images in vertex order. Round-trips bit-exactly.
std::string to_text(const Placement& p);
Placement placement_from_text(const std::string& text);
void write_placement(std::ostream& os, const Placement& p);
Placement read_placement(std::istream& is);

}  // namespace gpack
