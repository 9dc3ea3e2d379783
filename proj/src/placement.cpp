#include "gpack/placement.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gpack {

std::string VerificationReport::to_json() const {
    std::ostringstream os;
    os << "{\"ok\":" << (ok ? "true" : "false");
    if (!ok) {
        os << ",\"kind\":\"" << kind << "\",\"copy_i\":" << copy_i << ",\"copy_j\":" << copy_j;
        if (graph_edge.first >= 0)
            os << ",\"edge\":[" << graph_edge.first << ',' << graph_edge.second << ']';
        if (host_edge.first >= 0)
            os << ",\"host_edge\":[" << host_edge.first << ',' << host_edge.second << ']';
    }
    os << ",\"used_host_edges\":" << used_host_edges << '}';
    return os.str();
}

VerificationReport verify(const Graph& g, const Placement& p) {
    if (p.k < 1) throw std::invalid_argument("verify: placement has no copies");
    for (const auto& m : p.maps)
        if (static_cast<int>(m.size()) != g.order())
            throw std::invalid_argument("verify: map domain does not match V(g)");
    if (static_cast<int>(p.maps.size()) != p.k)
        throw std::invalid_argument("verify: copy count mismatch");
    if (g.order() > p.n_host)
        throw std::invalid_argument("verify: host smaller than the graph");

    VerificationReport rep;
    const int nh = p.n_host;
    std::vector<char> seen(nh);
    for (int i = 0; i < p.k; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int v = 0; v < g.order(); ++v) {
            int h = p.maps[i][v];
            if (h < 0 || h >= nh) {
                rep.kind = "bad_host";
                rep.copy_i = i + 1;
                return rep;
            }
            if (seen[h]) {
                rep.kind = "not_injective";
                rep.copy_i = i + 1;
                return rep;
            }
            seen[h] = 1;
        }
    }
    // owner[host edge] = 1-based copy that first used it
    std::vector<int> owner(static_cast<size_t>(nh) * nh, 0);
    int used = 0;
    for (int i = 0; i < p.k; ++i) {
        for (const auto& [u, v] : g.edges()) {
            int a = p.maps[i][u], b = p.maps[i][v];
            if (a > b) std::swap(a, b);
            int& o = owner[static_cast<size_t>(a) * nh + b];
            if (o != 0) {
                rep.kind = "shared_edge";
                rep.copy_i = o;
                rep.copy_j = i + 1;
                rep.graph_edge = {u, v};
                rep.host_edge = {a, b};
                rep.used_host_edges = used;
                return rep;
            }
            o = i + 1;
            ++used;
        }
    }
    rep.ok = true;
    rep.used_host_edges = used;
    return rep;
}

VertexStatus vertex_status(const Placement& p, int v) {
    if (v < 0 || v >= p.domain_size()) throw std::invalid_argument("vertex_status: unknown vertex");
    if (p.k == 1) return VertexStatus::Placed;  // k=1: Placed and Fixed coincide
    bool all_equal = true, all_distinct = true;
    std::vector<int> images;
    images.reserve(p.k);
    for (int i = 0; i < p.k; ++i) {
        int h = p.maps[i][v];
        if (!images.empty() && h != images.front()) all_equal = false;
        images.push_back(h);
    }
    std::sort(images.begin(), images.end());
    all_distinct = std::adjacent_find(images.begin(), images.end()) == images.end();
    if (all_distinct) return VertexStatus::Placed;
    if (all_equal) return VertexStatus::Fixed;
    return VertexStatus::Mixed;
}

bool dispersed(const Placement& p) {
    for (int v = 0; v < p.domain_size(); ++v)
        if (vertex_status(p, v) != VertexStatus::Placed) return false;
    return true;
}

Placement relabel(const Placement& p, const std::vector<int>& host_map, int new_n_host) {
    if (static_cast<int>(host_map.size()) < p.n_host)
        throw std::invalid_argument("relabel: map smaller than host");
    int nh = new_n_host > 0 ? new_n_host : p.n_host;
    std::vector<char> hit(nh, 0);
    for (int h = 0; h < p.n_host; ++h) {
        int t = host_map[h];
        if (t < 0 || t >= nh) throw std::invalid_argument("relabel: image out of range");
        if (hit[t]) throw std::invalid_argument("relabel: map not injective");
        hit[t] = 1;
    }
    Placement out{p.k, nh, p.maps};
    for (auto& m : out.maps)
        for (auto& h : m) h = host_map[h];
    return out;
}

std::string to_text(const Placement& p) {
    std::ostringstream os;
    write_placement(os, p);
    return os.str();
}

void write_placement(std::ostream& os, const Placement& p) {
    os << p.k << ' ' << p.n_host << ' ' << p.domain_size() << '\n';
    for (const auto& m : p.maps) {
        for (size_t j = 0; j < m.size(); ++j) {
            if (j) os << ' ';
            os << m[j];
        }
        os << '\n';
    }
}

Placement read_placement(std::istream& is) {
    Placement p;
    int dom = 0;
    if (!(is >> p.k >> p.n_host >> dom)) throw std::invalid_argument("placement: bad header");
    if (p.k < 1 || dom < 0) throw std::invalid_argument("placement: bad header values");
    p.maps.assign(p.k, std::vector<int>(dom));
    for (auto& m : p.maps)
        for (auto& h : m)
            if (!(is >> h)) throw std::invalid_argument("placement: truncated body");
    return p;
}

Placement placement_from_text(const std::string& text) {
    std::istringstream is(text);
    return read_placement(is);
}

}  // namespace gpack
