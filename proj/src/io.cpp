#include "gpack/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "gpack/graph6.hpp"

namespace gpack {
namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int declared_n = -1;
    std::vector<std::pair<long, long>> raw;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        if (s.rfind("n=", 0) == 0) {
            try {
                declared_n = std::stoi(s.substr(2));
            } catch (...) {
                throw ParseError("line " + std::to_string(lineno) + ": bad n= header");
            }
            if (declared_n < 0)
                throw ParseError("line " + std::to_string(lineno) + ": negative vertex count");
            continue;
        }
        std::istringstream ls(s);
        long u, v;
        if (!(ls >> u >> v))
            throw ParseError("line " + std::to_string(lineno) + ": expected `u v`");
        std::string rest;
        if (ls >> rest)
            throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
        if (u < 0 || v < 0)
            throw ParseError("line " + std::to_string(lineno) + ": negative vertex label");
        if (u == v) throw ParseError("line " + std::to_string(lineno) + ": loop edge");
        raw.emplace_back(u, v);
    }
    std::vector<long> labels;
    for (auto& [u, v] : raw) {
        labels.push_back(u);
        labels.push_back(v);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    int n;
    auto index_of = [&](long x) {
        return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), x) - labels.begin());
    };
    std::vector<Edge> edges;
    if (declared_n >= 0) {
        n = declared_n;
        for (auto& [u, v] : raw) {
            if (u >= n || v >= n)
                throw ParseError("vertex label exceeds declared n=" + std::to_string(n));
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
    } else {
        n = static_cast<int>(labels.size());
        for (auto& [u, v] : raw) edges.emplace_back(index_of(u), index_of(v));
    }
    std::sort(edges.begin(), edges.end());
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    try {
        return Graph(n, std::move(edges));
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid edge list: ") + e.what());
    }
}

Graph parse_graph(std::istream& in, GraphFormat format) {
    if (format == GraphFormat::EdgeList) return parse_edge_list(in);
    if (format == GraphFormat::Graph6) {
        std::string line;
        while (std::getline(in, line)) {
            auto s = strip(line);
            if (s.empty() || s[0] == '#' || s[0] == '>') continue;
            try {
                return from_graph6(s);
            } catch (const std::exception& e) {
                throw ParseError(std::string("graph6: ") + e.what());
            }
        }
        throw ParseError("graph6: no data line");
    }
    // Auto: buffer the stream, sniff the first payload line.
    std::stringstream buf;
    buf << in.rdbuf();
    std::string all = buf.str();
    std::istringstream sniff(all);
    std::string line;
    while (std::getline(sniff, line)) {
        auto s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        std::istringstream replay(all);
        if (std::isdigit(static_cast<unsigned char>(s[0])) || s.rfind("n=", 0) == 0)
            return parse_edge_list(replay);
        return parse_graph(replay, GraphFormat::Graph6);
    }
    throw ParseError("empty input");
}

Graph parse_graph_file(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_graph(in, format);
}

}  // namespace gpack
