#include "gpack/graph6.hpp"

#include <istream>
#include <stdexcept>

namespace gpack {

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
        out.push_back(static_cast<char>((n & 0x3f) + 63));
    } else {
        throw std::invalid_argument("to_graph6: order too large");
    }
    int bit = 5, acc = 0;
    for (int i = 1; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            if (g.has_edge(j, i)) acc |= 1 << bit;
            if (--bit < 0) {
                out.push_back(static_cast<char>(acc + 63));
                bit = 5;
                acc = 0;
            }
        }
    }
    if (bit != 5) out.push_back(static_cast<char>(acc + 63));
    return out;
}

Graph from_graph6(const std::string& line) {
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size()) throw std::invalid_argument("graph6: truncated");
        int c = static_cast<unsigned char>(line[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: bad byte");
        return c - 63;
    };
    int n;
    if (!line.empty() && line[0] == 126) {
        ++pos;
        n = next();
        n = (n << 6) | next();
        n = (n << 6) | next();
    } else {
        n = next();
    }
    std::vector<Edge> es;
    int bit = -1, acc = 0;
    for (int i = 1; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            if (bit < 0) {
                acc = next();
                bit = 5;
            }
            if (acc & (1 << bit)) es.emplace_back(j, i);
            --bit;
        }
    }
    return Graph(n, std::move(es));
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty() || line[0] == '#' || line[0] == '>') continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

}  // namespace gpack
