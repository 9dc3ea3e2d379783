#include "gpack/wcatalog.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gpack/canonical.hpp"
#include "gpack/graph6.hpp"

namespace gpack {

bool is_w_member(const Graph& g, const WCatalog& catalog) {
    if (!g.is_tree()) return false;
    if (g.order() > catalog.max_order || g.order() < 8) return false;
    std::string key = canonical_key(g);
    return std::binary_search(catalog.keys.begin(), catalog.keys.end(), key);
}

void save_w_catalog(std::ostream& os, const WCatalog& cat) {
    os << "# derive_w max_order=" << cat.max_order << " members=" << cat.members.size()
       << " unknown=0\n";
    for (const auto& m : cat.members) os << to_graph6(m) << '\n';
}

WCatalog load_w_catalog(std::istream& is) {
    WCatalog cat;
    std::string line;
    bool have_header = false;
    while (std::getline(is, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto pos = line.find("max_order=");
            if (pos != std::string::npos)
                cat.max_order = std::stoi(line.substr(pos + 10));
            have_header = true;
            continue;
        }
        cat.members.push_back(from_graph6(line));
    }
    if (!have_header || cat.max_order < 8)
        throw std::runtime_error("w catalog: missing or invalid metadata header");
    cat.keys.reserve(cat.members.size());
    for (const auto& m : cat.members) cat.keys.push_back(canonical_key(m));
    std::sort(cat.keys.begin(), cat.keys.end());
    return cat;
}

}  // namespace gpack
