#include "gpack/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>
#include <thread>

#include "gpack/canonical.hpp"
#include "gpack/graph6.hpp"

namespace gpack {
namespace {

class Searcher {
public:
    Searcher(const Graph& g, int k, const SearchBudget& budget, const SearchOptions& opts)
        : g_(g), n_(g.order()), k_(k), budget_(budget), opts_(opts) {
        order_.resize(n_);
        for (int v = 0; v < n_; ++v) order_[v] = v;
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return g_.degree(a) > g_.degree(b); });
        pos_of_.assign(n_, -1);
        for (int j = 0; j < n_; ++j) pos_of_[order_[j]] = j;
        used_edge_.assign(static_cast<size_t>(n_) * n_, 0);
        commit_deg_.assign(n_, 0);
        copy_used_.assign(k_, std::vector<char>(n_, 0));
        vert_images_.assign(n_, {});
        maps_.assign(k_, std::vector<int>(n_, -1));
        need_place_.assign(n_, opts_.require_dispersed ? 1 : 0);
        for (int v : opts_.must_place) need_place_.at(v) = 1;
        start_ = std::chrono::steady_clock::now();
    }

    SearchResult run() {
        SearchResult res;
        if (n_ == 0) {
            res.verdict = SearchVerdict::Found;
            res.placement = Placement{k_, 0, std::vector<std::vector<int>>(k_)};
            res.complete = true;
            return res;
        }
        // counting bound: k copies of e(g) edges must fit in K_n
        if (static_cast<long long>(k_) * g_.size() > static_cast<long long>(n_) * (n_ - 1) / 2) {
            res.verdict = SearchVerdict::Impossible;
            res.complete = true;
            return res;
        }
        bool any_placed_constraint =
            opts_.require_dispersed || !opts_.must_place.empty();
        if (any_placed_constraint && k_ > n_) {
            res.verdict = SearchVerdict::Impossible;
            res.complete = true;
            return res;
        }
        bool found = place_copy(0);
        res.nodes = nodes_;
        if (found) {
            res.verdict = SearchVerdict::Found;
            res.placement = Placement{k_, n_, maps_};
            res.complete = true;
        } else if (aborted_) {
            res.verdict = SearchVerdict::Unknown;
        } else {
            res.verdict = SearchVerdict::Impossible;
            res.complete = true;
        }
        return res;
    }

private:
    bool out_of_budget() {
        if (budget_.node_limit && nodes_ > budget_.node_limit) return true;
        if (budget_.time_limit_s > 0 && (nodes_ & 0x3ff) == 0) {
            auto dt = std::chrono::steady_clock::now() - start_;
            if (std::chrono::duration<double>(dt).count() > budget_.time_limit_s) return true;
        }
        return false;
    }

    bool place_copy(int c) {
        if (c == k_) return true;
        if (budget_.symmetry_breaking && c == 0) {
            // phi_1 = identity: valid up to relabeling the host clique
            for (int v = 0; v < n_; ++v)
                if (!assign(c, v, v)) {
                    for (int w = 0; w < v; ++w) unassign(c, w, w);
                    return false;
                }
            if (place_copy(c + 1)) return true;
            for (int v = 0; v < n_; ++v) unassign(c, v, v);
            return false;
        }
        return extend(c, 0, budget_.symmetry_breaking && c >= 2);
    }

    // Assign vertices of copy c in order_ starting at position j.
    // `tied` means this copy equals copy c-1 on all earlier positions.
    bool extend(int c, int j, bool tied) {
        if (j == n_) return place_copy(c + 1);
        const int v = order_[j];
        const int prev = tied ? maps_[c - 1][v] : 0;
        for (int h = prev; h < n_; ++h) {
            ++nodes_;
            if (aborted_ || out_of_budget()) {
                aborted_ = true;
                return false;
            }
            if (copy_used_[c][h]) continue;
            if (need_place_[v] &&
                std::find(vert_images_[v].begin(), vert_images_[v].end(), h) != vert_images_[v].end())
                continue;
            if (!assign(c, v, h)) continue;
            if (extend(c, j + 1, tied && h == prev)) return true;
            unassign(c, v, h);
            if (aborted_) return false;
        }
        return false;
    }

    bool assign(int c, int v, int h) {
        if (commit_deg_[h] + g_.degree(v) > n_ - 1) return false;
        // edges to neighbours already placed in this copy
        int added = 0;
        const auto& nbrs = g_.neighbors(v);
        for (int u : nbrs) {
            int hu = maps_[c][u];
            if (hu < 0) continue;
            if (used_edge_[static_cast<size_t>(h) * n_ + hu]) {
                rollback_edges(c, v, h, added);
                return false;
            }
            used_edge_[static_cast<size_t>(h) * n_ + hu] = 1;
            used_edge_[static_cast<size_t>(hu) * n_ + h] = 1;
            ++added;
        }
        maps_[c][v] = h;
        copy_used_[c][h] = 1;
        commit_deg_[h] += g_.degree(v);
        vert_images_[v].push_back(h);
        return true;
    }

    void rollback_edges(int c, int v, int h, int added) {
        const auto& nbrs = g_.neighbors(v);
        for (int u : nbrs) {
            if (added == 0) break;
            int hu = maps_[c][u];
            if (hu < 0) continue;
            used_edge_[static_cast<size_t>(h) * n_ + hu] = 0;
            used_edge_[static_cast<size_t>(hu) * n_ + h] = 0;
            --added;
        }
    }

    void unassign(int c, int v, int h) {
        vert_images_[v].pop_back();
        commit_deg_[h] -= g_.degree(v);
        copy_used_[c][h] = 0;
        maps_[c][v] = -1;
        for (int u : g_.neighbors(v)) {
            int hu = maps_[c][u];
            if (hu < 0) continue;
            used_edge_[static_cast<size_t>(h) * n_ + hu] = 0;
            used_edge_[static_cast<size_t>(hu) * n_ + h] = 0;
        }
    }

    const Graph& g_;
    int n_, k_;
    SearchBudget budget_;
    SearchOptions opts_;
    std::vector<int> order_, pos_of_;
    std::vector<char> used_edge_, need_place_;
    std::vector<std::vector<char>> copy_used_;
    std::vector<int> commit_deg_;
    std::vector<std::vector<int>> maps_;
    std::vector<std::vector<int>> vert_images_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

SearchResult brute_force_pack(const Graph& g, int k, const SearchBudget& budget,
                              const SearchOptions& opts) {
    if (k < 1) throw std::invalid_argument("brute_force_pack: k >= 1");
    if (!budget.symmetry_breaking) {
        Searcher s(g, k, budget, opts);
        return s.run();
    }
    // Search on the canonical labeling so results do not depend on input labels.
    auto canon = canonical_form(g);
    Graph cg = g.relabeled(canon.perm);
    SearchOptions copts = opts;
    for (auto& v : copts.must_place) v = canon.perm[v];
    Searcher s(cg, k, budget, copts);
    SearchResult res = s.run();
    if (res.placement) {
        Placement orig{res.placement->k, res.placement->n_host,
                       std::vector<std::vector<int>>(res.placement->k,
                                                     std::vector<int>(g.order()))};
        for (int i = 0; i < orig.k; ++i)
            for (int v = 0; v < g.order(); ++v)
                orig.maps[i][v] = res.placement->maps[i][canon.perm[v]];
        res.placement = std::move(orig);
    }
    return res;
}

std::vector<Graph> enumerate_family(int n, int max_edges, const FamilyFilter& filter) {
    if (n < 0) throw std::invalid_argument("enumerate_family: n >= 0");
    if (n > 13)
        throw std::invalid_argument("enumerate_family: built-in enumeration limited to n <= 13; "
                                    "use a graph6 stream for larger families");
    long long cap = static_cast<long long>(n) * (n - 1) / 2;
    max_edges = static_cast<int>(std::min<long long>(max_edges, cap));

    std::map<std::string, Graph> level;
    Graph empty(n, {});
    level.emplace(canonical_key(empty), empty);
    std::vector<Graph> out;

    auto emit = [&](const Graph& g) {
        if (filter.exact_edges && g.size() != max_edges) return;
        if (filter.connected_only && !g.connected()) return;
        out.push_back(g);
    };

    for (const auto& [key, g] : level) emit(g);
    for (int e = 1; e <= max_edges; ++e) {
        std::map<std::string, Graph> next;
        for (const auto& [key, g] : level) {
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (g.has_edge(u, v)) continue;
                    Graph h = g.with_edge(u, v);
                    if (filter.max_degree && h.max_degree() > filter.max_degree) continue;
                    if (filter.girth_min) {
                        auto gi = h.girth();
                        if (gi && *gi < filter.girth_min) continue;
                    }
                    auto cf = canonical_form(h);
                    if (next.count(cf.key)) continue;
                    next.emplace(cf.key, h.relabeled(cf.perm));
                }
            }
        }
        level = std::move(next);
        for (const auto& [key, g] : level) emit(g);
    }
    return out;
}

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_trees: n >= 1");
    std::map<std::string, Graph> level;
    Graph single(1, {});
    level.emplace(canonical_key(single), single);
    for (int m = 2; m <= n; ++m) {
        std::map<std::string, Graph> next;
        for (const auto& [key, t] : level) {
            for (int v = 0; v < t.order(); ++v) {
                std::vector<Edge> es = t.edges();
                es.emplace_back(v, t.order());
                Graph grown(t.order() + 1, std::move(es));
                auto cf = canonical_form(grown);
                if (next.count(cf.key)) continue;
                next.emplace(cf.key, grown.relabeled(cf.perm));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (const auto& [key, t] : level) out.push_back(t);
    return out;
}

CensusResult census(int n, int max_edges, int k, const FamilyFilter& filter,
                    const SearchBudget& budget, int jobs) {
    std::vector<Graph> family = enumerate_family(n, max_edges, filter);
    CensusResult res;
    res.total = static_cast<int>(family.size());
    std::vector<int> verdict(family.size(), 0);  // 0 placeable, 1 impossible, 2 unknown

    auto work = [&](size_t begin, size_t step) {
        for (size_t i = begin; i < family.size(); i += step) {
            SearchResult r = brute_force_pack(family[i], k, budget);
            verdict[i] = r.verdict == SearchVerdict::Found ? 0
                       : r.verdict == SearchVerdict::Impossible ? 1 : 2;
        }
    };
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
        for (auto& th : pool) th.join();
    }
    for (size_t i = 0; i < family.size(); ++i) {
        if (verdict[i] == 1) res.exceptions.push_back(family[i]);
        else if (verdict[i] == 2) ++res.unknown;
    }
    std::sort(res.exceptions.begin(), res.exceptions.end(),
              [](const Graph& a, const Graph& b) { return to_graph6(a) < to_graph6(b); });
    return res;
}

WCatalog derive_w(int max_order, const SearchBudget& budget) {
    if (max_order < 8) throw std::invalid_argument("derive_w: max_order >= 8");
    if (max_order > 13) throw std::invalid_argument("derive_w: complete search bounded at 13");
    WCatalog cat;
    cat.max_order = max_order;
    for (int n = 8; n <= max_order; ++n) {
        for (const auto& t : enumerate_trees(n)) {
            if (t.max_degree() > n - 4) continue;
            SearchResult r = brute_force_pack(t, 4, budget);
            if (r.verdict == SearchVerdict::Unknown)
                throw std::runtime_error("derive_w: budget exhausted; catalog not emitted");
            if (r.verdict == SearchVerdict::Impossible) {
                if (!r.complete) throw std::runtime_error("derive_w: incomplete refutation");
                cat.members.push_back(t);
            }
        }
    }
    std::sort(cat.members.begin(), cat.members.end(),
              [](const Graph& a, const Graph& b) { return to_graph6(a) < to_graph6(b); });
    cat.keys.reserve(cat.members.size());
    for (const auto& m : cat.members) cat.keys.push_back(canonical_key(m));
    std::sort(cat.keys.begin(), cat.keys.end());
    return cat;
}

}  // namespace gpack
