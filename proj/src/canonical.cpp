#include "gpack/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gpack {
namespace {

// Colors are dense ints; refine until stable under (color, sorted neighbor colors).
std::vector<int> refine(const Graph& g, std::vector<int> colors) {
    const int n = g.order();
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            nb.reserve(g.neighbors(v).size());
            for (int w : g.neighbors(v)) nb.push_back(colors[w]);
            std::sort(nb.begin(), nb.end());
            sig[v] = {colors[v], std::move(nb)};
        }
        std::map<std::pair<int, std::vector<int>>, int> rank;
        for (int v = 0; v < n; ++v) rank.emplace(sig[v], 0);
        int next = 0;
        for (auto& [k, r] : rank) r = next++;
        std::vector<int> fresh(n);
        for (int v = 0; v < n; ++v) fresh[v] = rank[sig[v]];
        if (fresh == colors) return colors;
        colors = std::move(fresh);
    }
}

bool discrete(const std::vector<int>& colors) {
    std::vector<char> seen(colors.size(), 0);
    for (int c : colors) {
        if (seen[c]) return false;
        seen[c] = 1;
    }
    return true;
}

std::string adjacency_key(const Graph& g, const std::vector<int>& perm) {
    const int n = g.order();
    std::string key((static_cast<size_t>(n) * (n - 1) / 2 + 7) / 8 + 1, '\0');
    key[0] = static_cast<char>(n);
    for (const auto& [u, v] : g.edges()) {
        int a = perm[u], b = perm[v];
        if (a > b) std::swap(a, b);
        size_t idx = static_cast<size_t>(b) * (b - 1) / 2 + a;
        key[1 + idx / 8] |= static_cast<char>(1 << (idx % 8));
    }
    return key;
}

struct Search {
    const Graph& g;
    std::string best;
    std::vector<int> best_perm;
    bool have_best = false;

    void leaf(const std::vector<int>& colors) {
        // colors are a bijection onto 0..n-1
        std::string key = adjacency_key(g, colors);
        if (!have_best || key < best) {
            best = std::move(key);
            best_perm = colors;
            have_best = true;
        }
    }

    void run(std::vector<int> colors) {
        colors = refine(g, colors);
        if (discrete(colors)) {
            leaf(colors);
            return;
        }
        // Split the smallest non-singleton color class (lowest color wins ties).
        const int n = g.order();
        std::vector<int> count(n, 0);
        for (int c : colors) ++count[c];
        int target = -1;
        for (int c = 0; c < n; ++c)
            if (count[c] >= 2 && (target < 0 || count[c] < count[target])) target = c;
        for (int v = 0; v < n; ++v) {
            if (colors[v] != target) continue;
            auto branched = colors;
            for (int w = 0; w < n; ++w)
                if (branched[w] > target || (branched[w] == target && w != v)) ++branched[w];
            // v keeps color `target`, the rest of its class moved up by one
            run(std::move(branched));
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    const int n = g.order();
    if (n > 255) throw std::invalid_argument("canonical_form: graph too large");
    std::vector<int> init(n, 0);
    for (int v = 0; v < n; ++v) init[v] = g.degree(v);
    // compress degrees into dense colors
    {
        auto sorted = init;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (auto& c : init)
            c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
    }
    Search s{g};
    s.run(std::move(init));
    return {std::move(s.best), std::move(s.best_perm)};
}

std::string canonical_key(const Graph& g) {
    return canonical_form(g).key;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_key(a) == canonical_key(b);
}

}  // namespace gpack
