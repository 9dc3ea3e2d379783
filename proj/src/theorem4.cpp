#include "gpack/theorem4.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gpack/canonical.hpp"
#include "gpack/constructions.hpp"
#include "gpack/fixtures.hpp"

namespace gpack {

const char* refusal_name(RefusalReason r) {
    switch (r) {
        case RefusalReason::MaxDegreeTooHigh: return "MaxDegreeTooHigh";
        case RefusalReason::TooSmall: return "TooSmall";
        case RefusalReason::ExceptionW: return "ExceptionW";
        case RefusalReason::ParityObstruction: return "ParityObstruction";
        case RefusalReason::OutsideTheoremScope: return "OutsideTheoremScope";
        case RefusalReason::SearchExhausted: return "SearchExhausted";
    }
    return "?";
}

namespace {

constexpr int kCopies = 4;

struct Ctx {
    const WCatalog* catalog = nullptr;
    SearchBudget budget;
    std::vector<std::string> trace;
    int depth = 0;

    void log(const std::string& s) { trace.push_back(s); }
};

std::string fmt(const char* name, std::initializer_list<long long> params) {
    std::ostringstream os;
    os << "LEMMA " << name;
    for (auto p : params) os << ' ' << p;
    return os.str();
}

std::optional<Placement> pack4_rec(const Graph& g, Ctx& ctx);

bool placed_in(const Placement& p, int v) {
    return vertex_status(p, v) == VertexStatus::Placed;
}

// ------------------------------------------------------------------
// component structure helpers (vertex ids are ids of the ambient graph)

// The unique cycle of a unicyclic component, in cyclic order.
std::vector<int> find_cycle(const Graph& g, const std::vector<int>& comp) {
    std::set<int> alive(comp.begin(), comp.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = alive.begin(); it != alive.end();) {
            int d = 0;
            for (int w : g.neighbors(*it)) d += alive.count(w) ? 1 : 0;
            if (d <= 1) {
                it = alive.erase(it);
                changed = true;
            } else {
                ++it;
            }
        }
    }
    if (alive.empty()) return {};
    std::vector<int> cyc;
    int start = *alive.begin(), prev = -1, cur = start;
    do {
        cyc.push_back(cur);
        int nxt = -1;
        for (int w : g.neighbors(cur))
            if (w != prev && alive.count(w)) { nxt = w; break; }
        prev = cur;
        cur = nxt;
    } while (cur != start && cur != -1);
    return cyc;
}

struct HangBranch {
    int attach = -1;             // cycle vertex
    int root = -1;               // first off-cycle vertex
    std::vector<int> verts;      // all branch vertices (root included)
};

std::vector<HangBranch> branches_of(const Graph& g, const std::vector<int>& comp,
                                    const std::vector<int>& cycle) {
    std::set<int> on_cycle(cycle.begin(), cycle.end());
    std::vector<HangBranch> out;
    for (int u : cycle) {
        for (int r : g.neighbors(u)) {
            if (on_cycle.count(r)) continue;
            HangBranch b;
            b.attach = u;
            b.root = r;
            std::vector<int> stack{r};
            std::set<int> seen{r, u};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                b.verts.push_back(v);
                for (int w : g.neighbors(v))
                    if (!seen.count(w)) {
                        seen.insert(w);
                        stack.push_back(w);
                    }
            }
            std::sort(b.verts.begin(), b.verts.end());
            out.push_back(std::move(b));
        }
    }
    (void)comp;
    return out;
}

// Trims a hanging branch to a bare path starting at its root by deleting
// leaves of g: the non-leaf part must already form a path from the root; one
// decorating leaf may stay at the far end. Returns (tail root->tip, deleted).
std::optional<std::pair<std::vector<int>, std::vector<int>>>
trim_branch_to_tail(const Graph& g, const HangBranch& br) {
    if (br.verts.size() == 1) return {{std::vector<int>{br.root}, {}}};
    std::set<int> in_branch(br.verts.begin(), br.verts.end());
    std::vector<int> core;
    for (int v : br.verts)
        if (g.degree(v) >= 2) core.push_back(v);
    std::set<int> in_core(core.begin(), core.end());
    // walk the core from the root
    if (!in_core.count(br.root)) return std::nullopt;
    std::vector<int> tail{br.root};
    int prev = br.attach, cur = br.root;
    while (true) {
        int nxt = -1, branching = 0;
        for (int w : g.neighbors(cur)) {
            if (w == prev || !in_core.count(w)) continue;
            nxt = w;
            ++branching;
        }
        if (branching > 1) return std::nullopt;
        if (nxt < 0) break;
        tail.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    if (tail.size() != core.size()) return std::nullopt;  // core not a path from root
    // keep one decorating leaf at the tip, if any
    int tip = tail.back();
    int kept_leaf = -1;
    for (int w : g.neighbors(tip))
        if (in_branch.count(w) && g.degree(w) == 1 && !in_core.count(w)) {
            kept_leaf = kept_leaf < 0 ? w : std::min(kept_leaf, w);
        }
    if (kept_leaf >= 0) tail.push_back(kept_leaf);
    std::vector<int> deleted;
    std::set<int> in_tail(tail.begin(), tail.end());
    for (int v : br.verts)
        if (!in_tail.count(v)) {
            if (g.degree(v) != 1) return std::nullopt;
            deleted.push_back(v);
        }
    return {{tail, deleted}};
}

// Trims a tree (a full component) to a path: the non-leaf core must be a
// path; one leaf may stay at each end. K_1 and K_2 are kept whole.
std::optional<std::pair<std::vector<int>, std::vector<int>>>
trim_tree_to_path(const Graph& g, const std::vector<int>& tree) {
    std::vector<int> core;
    for (int v : tree)
        if (g.degree(v) >= 2) core.push_back(v);
    if (core.empty()) {
        // K_1 or K_2
        std::vector<int> path(tree.begin(), tree.end());
        if (path.size() > 2) return std::nullopt;
        return {{path, {}}};
    }
    std::set<int> in_core(core.begin(), core.end());
    int end = -1;
    for (int v : core) {
        int d = 0;
        for (int w : g.neighbors(v)) d += in_core.count(w) ? 1 : 0;
        if (d > 2) return std::nullopt;
        if (d <= 1) end = end < 0 ? v : std::min(end, v);
    }
    if (end < 0) return std::nullopt;
    std::vector<int> spine{end};
    int prev = -1, cur = end;
    while (true) {
        int nxt = -1;
        for (int w : g.neighbors(cur))
            if (w != prev && in_core.count(w)) { nxt = w; break; }
        if (nxt < 0) break;
        spine.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    if (spine.size() != core.size()) return std::nullopt;
    auto leaf_at = [&](int v, int avoid) {
        int best = -1;
        for (int w : g.neighbors(v))
            if (w != avoid && g.degree(w) == 1) best = best < 0 ? w : std::min(best, w);
        return best;
    };
    std::vector<int> path = spine;
    int front_leaf = leaf_at(spine.front(), spine.size() > 1 ? spine[1] : -1);
    if (front_leaf >= 0) path.insert(path.begin(), front_leaf);
    int back_leaf = leaf_at(spine.back(), spine.size() > 1 ? spine[spine.size() - 2] : front_leaf);
    if (back_leaf >= 0 && back_leaf != front_leaf) path.push_back(back_leaf);
    std::set<int> in_path(path.begin(), path.end());
    std::vector<int> deleted;
    for (int v : tree)
        if (!in_path.count(v)) {
            if (g.degree(v) != 1) return std::nullopt;
            deleted.push_back(v);
        }
    return {{path, deleted}};
}

// Lasso vertex sequence: cycle walked so that v_s is cycle[branch_idx] and
// v_1 is its neighbour in direction dir, followed by the tail (root first).
std::vector<int> make_lasso_seq(const std::vector<int>& cycle, int branch_idx, int dir,
                                const std::vector<int>& tail) {
    const int s = static_cast<int>(cycle.size());
    std::vector<int> seq;
    for (int j = 1; j <= s; ++j)
        seq.push_back(cycle[((branch_idx + dir * j) % s + s) % s]);
    seq.insert(seq.end(), tail.begin(), tail.end());
    return seq;
}

// Constrained search on an induced block; must_place uses ambient ids.
std::optional<Placement> block_search(const Graph& g, const std::vector<int>& block,
                                      const std::vector<int>& must_place, Ctx& ctx,
                                      bool require_disp = false) {
    Graph sub = g.induced(block);
    std::vector<int> pos(g.order(), -1);
    for (size_t j = 0; j < block.size(); ++j) pos[block[j]] = static_cast<int>(j);
    SearchOptions opts;
    opts.require_dispersed = require_disp;
    for (int v : must_place)
        if (pos[v] >= 0) opts.must_place.push_back(pos[v]);
    SearchBudget bud = ctx.budget;
    bud.node_limit = std::min<std::uint64_t>(bud.node_limit, 20'000'000);
    SearchResult r = brute_force_pack(sub, kCopies, bud, opts);
    if (r.verdict != SearchVerdict::Found) return std::nullopt;
    return r.placement;
}

// ------------------------------------------------------------------
// trees

bool tree_qualifies(const Graph& t, const Ctx& ctx) {
    int n = t.order();
    if (n < 8) return false;
    if (t.max_degree() > n - 4) return false;
    if (is_w_member(t, *ctx.catalog)) return false;
    return true;
}

std::optional<Placement> tree_pack4_impl(const Graph& t, const std::vector<int>& must_place,
                                         Ctx& ctx) {
    const int n = t.order();
    if (n <= 11) {
        SearchOptions opts;
        opts.must_place = must_place;
        SearchResult r = brute_force_pack(t, kCopies, ctx.budget, opts);
        if (r.verdict == SearchVerdict::Found) {
            ctx.log(fmt("oracle_base", {n}));
            return r.placement;
        }
        return std::nullopt;
    }

    std::set<int> needed(must_place.begin(), must_place.end());
    auto recurse_extend = [&](const std::vector<int>& leaves) -> std::optional<Placement> {
        std::vector<int> keep_map;
        Graph reduced = t.removed(leaves, &keep_map);
        if (!tree_qualifies(reduced, ctx)) return std::nullopt;
        std::vector<int> old_to_new(n, -1);
        for (size_t j = 0; j < keep_map.size(); ++j) old_to_new[keep_map[j]] = static_cast<int>(j);
        std::vector<int> mp;
        for (int v : needed)
            if (old_to_new[v] >= 0) mp.push_back(old_to_new[v]);
        auto rec = tree_pack4_impl(reduced, mp, ctx);
        if (!rec) return std::nullopt;
        Placement full = extend_by_leaves(t, leaves, *rec);
        for (int v : needed)
            if (!placed_in(full, v)) return std::nullopt;
        ctx.log(fmt("lemma2_extend", {n}));
        return full;
    };

    // route 1: peel one leaf from each of four distinct nodes
    std::vector<int> node_list = t.nodes();
    if (node_list.size() >= 4) {
        std::stable_sort(node_list.begin(), node_list.end(),
                         [&](int a, int b) { return t.degree(a) > t.degree(b); });
        std::vector<int> leaves;
        for (int u : node_list) {
            if (static_cast<int>(leaves.size()) == kCopies) break;
            for (int w : t.neighbors(u))
                if (t.degree(w) == 1 && !needed.count(w)) {
                    leaves.push_back(w);
                    break;
                }
        }
        if (static_cast<int>(leaves.size()) == kCopies) {
            if (auto res = recurse_extend(leaves)) return res;
        }
    }

    // route 2: drop the whole leaf bunch at the most loaded vertex and pin it
    {
        int best = -1, best_cnt = 0;
        for (int u = 0; u < n; ++u) {
            int cnt = 0;
            for (int w : t.neighbors(u))
                if (t.degree(w) == 1 && !needed.count(w)) ++cnt;
            if (cnt > best_cnt || (cnt == best_cnt && cnt > 0 && t.degree(u) > t.degree(best))) {
                best = u;
                best_cnt = cnt;
            }
        }
        if (best >= 0 && best_cnt > 0) {
            std::vector<int> bunch;
            for (int w : t.neighbors(best))
                if (t.degree(w) == 1 && !needed.count(w)) bunch.push_back(w);
            // keep the reduced tree at order >= 8
            while (n - static_cast<int>(bunch.size()) < 8 && !bunch.empty()) bunch.pop_back();
            if (!bunch.empty() && n - static_cast<int>(bunch.size()) >= 8) {
                std::vector<int> keep_map;
                Graph reduced = t.removed(bunch, &keep_map);
                if (tree_qualifies(reduced, ctx)) {
                    std::vector<int> old_to_new(n, -1);
                    for (size_t j = 0; j < keep_map.size(); ++j)
                        old_to_new[keep_map[j]] = static_cast<int>(j);
                    std::vector<int> mp{old_to_new[best]};
                    for (int v : needed)
                        if (old_to_new[v] >= 0) mp.push_back(old_to_new[v]);
                    if (auto rec = tree_pack4_impl(reduced, mp, ctx)) {
                        Placement full = attach_leaves_fixed(t, bunch, *rec);
                        bool ok = true;
                        for (int v : needed)
                            if (!placed_in(full, v)) ok = false;
                        if (ok) {
                            ctx.log(fmt("obs1_bunch", {n, static_cast<long long>(bunch.size())}));
                            return full;
                        }
                    }
                }
            }
        }
    }

    // route 3: peel one leaf per node (fewer than four nodes), pinned re-attach
    {
        std::vector<int> leaves, pins;
        for (int u : t.nodes()) {
            for (int w : t.neighbors(u))
                if (t.degree(w) == 1 && !needed.count(w)) {
                    leaves.push_back(w);
                    pins.push_back(u);
                    break;
                }
        }
        if (!leaves.empty() && n - static_cast<int>(leaves.size()) >= 8) {
            std::vector<int> keep_map;
            Graph reduced = t.removed(leaves, &keep_map);
            if (tree_qualifies(reduced, ctx)) {
                std::vector<int> old_to_new(n, -1);
                for (size_t j = 0; j < keep_map.size(); ++j)
                    old_to_new[keep_map[j]] = static_cast<int>(j);
                std::vector<int> mp;
                for (int v : pins) mp.push_back(old_to_new[v]);
                for (int v : needed)
                    if (old_to_new[v] >= 0) mp.push_back(old_to_new[v]);
                if (auto rec = tree_pack4_impl(reduced, mp, ctx)) {
                    Placement full = attach_leaves_fixed(t, leaves, *rec);
                    bool ok = true;
                    for (int v : needed)
                        if (!placed_in(full, v)) ok = false;
                    if (ok) {
                        ctx.log(fmt("obs1_nodes", {n, static_cast<long long>(leaves.size())}));
                        return full;
                    }
                }
            }
        }
    }

    // last resort at moderate size
    if (n <= 13) {
        SearchOptions opts;
        opts.must_place = must_place;
        SearchResult r = brute_force_pack(t, kCopies, ctx.budget, opts);
        if (r.verdict == SearchVerdict::Found) {
            ctx.log(fmt("oracle_base", {n}));
            return r.placement;
        }
    }
    return std::nullopt;
}

// ------------------------------------------------------------------
// lemma 3.1: 10 <= n <= 13, two components, merge into one lasso

std::optional<Placement> lemma31_impl(const Graph& g, Ctx& ctx) {
    auto comps = g.components();
    if (comps.size() != 2) return std::nullopt;
    // A holds the cycle, B is the tree
    int ai = -1, bi = -1;
    for (int i = 0; i < 2; ++i) {
        Graph c = g.induced(comps[i]);
        if (c.size() == c.order()) ai = i;
        else if (c.size() == c.order() - 1) bi = i;
    }
    if (ai < 0 || bi < 0) return std::nullopt;
    const auto& av = comps[ai];
    const auto& bv = comps[bi];

    auto bt = trim_tree_to_path(g, bv);
    if (!bt) return std::nullopt;
    const std::vector<int>& bpath = bt->first;
    std::vector<int> deleted = bt->second;

    std::vector<int> cycle = find_cycle(g, av);
    if (static_cast<int>(cycle.size()) < 9) return std::nullopt;
    auto branches = branches_of(g, av, cycle);

    struct Cand {
        std::vector<int> seq;     // lasso order (cycle then tail)
        std::vector<int> del;     // deleted vertices of A
        int tail_len = 0;
    };
    std::vector<Cand> cands;
    auto push_candidate = [&](int branch_choice) {
        // branch_choice == -1 means A is a bare cycle
        std::vector<int> tail, del;
        int attach_idx = 0;
        if (branch_choice >= 0) {
            auto trimmed = trim_branch_to_tail(g, branches[branch_choice]);
            if (!trimmed) return;
            tail = trimmed->first;
            del = trimmed->second;
            for (size_t j = 0; j < branches.size(); ++j) {
                if (static_cast<int>(j) == branch_choice) continue;
                if (branches[j].verts.size() != 1) return;  // not removable in one round
                del.push_back(branches[j].root);
            }
            for (size_t i = 0; i < cycle.size(); ++i)
                if (cycle[i] == branches[branch_choice].attach) attach_idx = static_cast<int>(i);
        } else {
            if (!branches.empty()) return;
        }
        std::set<int> targets;
        for (int d : del) {
            for (int w : g.neighbors(d)) targets.insert(w);
        }
        for (int d : deleted)
            for (int w : g.neighbors(d)) targets.insert(w);
        for (int dir : {1, -1}) {
            int s = static_cast<int>(cycle.size());
            int v1 = cycle[((attach_idx + dir) % s + s) % s];
            if (targets.count(v1)) continue;
            Cand c;
            c.seq = make_lasso_seq(cycle, attach_idx, dir, tail);
            c.del = del;
            c.tail_len = static_cast<int>(tail.size());
            cands.push_back(std::move(c));
        }
    };
    if (branches.empty()) push_candidate(-1);
    for (size_t j = 0; j < branches.size(); ++j) push_candidate(static_cast<int>(j));
    if (cands.empty()) return std::nullopt;
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Cand& a, const Cand& b) { return a.tail_len > b.tail_len; });

    for (const auto& cand : cands) {
        // join an end of the B-path onto the lasso tail
        std::vector<int> seq = cand.seq;
        seq.insert(seq.end(), bpath.begin(), bpath.end());
        std::vector<int> del_all = cand.del;
        del_all.insert(del_all.end(), deleted.begin(), deleted.end());
        int l = static_cast<int>(seq.size());
        int s = static_cast<int>(cycle.size());
        if (s < 9) continue;

        std::vector<int> keep_map;
        Graph reduced = g.removed(del_all, &keep_map);
        std::vector<int> old_to_new(g.order(), -1);
        for (size_t j = 0; j < keep_map.size(); ++j) old_to_new[keep_map[j]] = static_cast<int>(j);

        BlockAssembly blocks(kCopies, reduced.order());
        std::vector<int> seq_new;
        for (int v : seq) seq_new.push_back(old_to_new[v]);
        blocks.add_block(seq_new, lasso_placement(l, s, kCopies));
        Placement phi_reduced = blocks.finish();
        if (!verify(reduced, phi_reduced).ok) continue;
        bool good = true;
        for (int d : del_all) {
            int nb = g.neighbors(d)[0];
            if (!placed_in(phi_reduced, old_to_new[nb])) good = false;
        }
        if (!good) continue;
        Placement full =
            del_all.empty() ? phi_reduced : attach_leaves_fixed(g, del_all, phi_reduced);
        if (!verify(g, full).ok) continue;
        ctx.log(fmt("lemma31", {g.order(), s, l}));
        return full;
    }
    return std::nullopt;
}

// ------------------------------------------------------------------
// lemma 3.111: placement of an induced part B after topping it up to an
// (l, l-1)-graph with bridges between components (minimum-degree endpoints)

std::optional<Placement> claim_3111_place(const Graph& g, const std::vector<int>& b_verts,
                                          Ctx& ctx) {
    Graph b = g.induced(b_verts);
    const int l = b.order();
    if (l < 8) return std::nullopt;
    int need = (l - 1) - b.size();
    if (need < 0) return std::nullopt;
    Graph bpp = b;
    std::vector<Edge> bridges;
    while (need > 0) {
        auto comps = bpp.components();
        if (comps.size() < 2) return std::nullopt;
        auto min_deg_vertex = [&](const std::vector<int>& verts) {
            int best = verts[0];
            for (int v : verts)
                if (bpp.degree(v) < bpp.degree(best)) best = v;
            return best;
        };
        int x = min_deg_vertex(comps[0]);
        int y = min_deg_vertex(comps[1]);
        bpp = bpp.with_edge(x, y);
        bridges.emplace_back(std::min(x, y), std::max(x, y));
        --need;
    }
    if (bpp.size() != l - 1) return std::nullopt;
    auto rec = pack4_rec(bpp, ctx);
    if (!rec) return std::nullopt;
    if (!verify(b, *rec).ok) return std::nullopt;  // restriction to B drops the bridges
    ctx.log(fmt("claim3111", {l, static_cast<long long>(bridges.size())}));
    return rec;
}

// ------------------------------------------------------------------
// claim 3.112: the triple (u,v,w) block against a fixed placement of H

std::optional<Placement> claim_triple_impl(const Graph& g, const std::vector<int>& isolated,
                                           int u, int v, int w, const Placement& phi_h_in,
                                           Ctx& ctx) {
    const int n = g.order();
    std::vector<int> m_verts = isolated;
    m_verts.push_back(u);
    m_verts.push_back(v);
    m_verts.push_back(w);
    std::sort(m_verts.begin(), m_verts.end());
    std::vector<int> keep_map;
    Graph h = g.removed(m_verts, &keep_map);
    std::vector<int> old_to_new(n, -1);
    for (size_t j = 0; j < keep_map.size(); ++j) old_to_new[keep_map[j]] = static_cast<int>(j);
    if (phi_h_in.domain_size() != h.order()) return std::nullopt;

    const int mb = static_cast<int>(m_verts.size());  // block size
    std::vector<int> mpos(n, -1);
    for (int j = 0; j < mb; ++j) mpos[m_verts[j]] = j;

    // cross neighbours in H for each of u, v, w
    auto h_nbrs = [&](int x) {
        std::vector<int> out;
        for (int y : g.neighbors(x))
            if (old_to_new[y] >= 0) out.push_back(old_to_new[y]);
        return out;
    };
    std::vector<int> un = h_nbrs(u), vn = h_nbrs(v), wn = h_nbrs(w);

    // enumerate per-copy images of (u, v, w) in the M-block such that all
    // block-internal and cross edges stay disjoint; isolated vertices fill the
    // remaining hosts arbitrarily afterwards
    std::vector<std::array<int, 3>> assign(kCopies, {-1, -1, -1});
    std::set<std::pair<int, int>> cross_used;   // (m-host, h-host)
    std::set<std::pair<int, int>> inner_used;   // m-host pairs
    long long steps = 0;

    auto try_copy = [&](auto&& self, int copy) -> bool {
        if (copy == kCopies) return true;
        if (++steps > 4'000'000) return false;
        for (int hu = 0; hu < mb; ++hu)
            for (int hv = 0; hv < mb; ++hv)
                for (int hw = 0; hw < mb; ++hw) {
                    if (hu == hv || hv == hw || hu == hw) continue;
                    std::vector<std::pair<int, int>> inner{{std::min(hu, hv), std::max(hu, hv)},
                                                           {std::min(hv, hw), std::max(hv, hw)}};
                    std::vector<std::pair<int, int>> cross;
                    for (int y : un) cross.emplace_back(hu, phi_h_in.maps[copy][y]);
                    for (int y : vn) cross.emplace_back(hv, phi_h_in.maps[copy][y]);
                    for (int y : wn) cross.emplace_back(hw, phi_h_in.maps[copy][y]);
                    bool ok = true;
                    for (auto& e : inner)
                        if (inner_used.count(e)) ok = false;
                    for (auto& e : cross)
                        if (cross_used.count(e)) ok = false;
                    if (!ok) continue;
                    for (auto& e : inner) inner_used.insert(e);
                    for (auto& e : cross) cross_used.insert(e);
                    assign[copy] = {hu, hv, hw};
                    if (self(self, copy + 1)) return true;
                    for (auto& e : inner) inner_used.erase(e);
                    for (auto& e : cross) cross_used.erase(e);
                    assign[copy] = {-1, -1, -1};
                }
        return false;
    };
    if (!try_copy(try_copy, 0)) return std::nullopt;

    // assemble: H block first, then the M block
    Placement full{kCopies, n, std::vector<std::vector<int>>(kCopies, std::vector<int>(n, -1))};
    const int off = h.order();
    for (int i = 0; i < kCopies; ++i) {
        for (int j = 0; j < h.order(); ++j) full.maps[i][keep_map[j]] = phi_h_in.maps[i][j];
        full.maps[i][u] = off + assign[i][0];
        full.maps[i][v] = off + assign[i][1];
        full.maps[i][w] = off + assign[i][2];
        // isolated vertices take the remaining block hosts
        std::vector<char> busy(mb, 0);
        busy[assign[i][0]] = busy[assign[i][1]] = busy[assign[i][2]] = 1;
        int next = 0;
        for (int x : isolated) {
            while (busy[next]) ++next;
            full.maps[i][x] = off + next;
            busy[next] = 1;
        }
    }
    if (!verify(g, full).ok) return std::nullopt;
    ctx.log(fmt("claim3112", {g.degree(u), g.degree(v), g.degree(w),
                              static_cast<long long>(isolated.size())}));
    return full;
}

// find (u,v,w) consecutive with the wanted degree patterns; returns matches
std::vector<std::array<int, 3>> degree_triples(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 2 && g.degree(v) != 3) continue;
        const auto& nb = g.neighbors(v);
        for (size_t a = 0; a < nb.size(); ++a)
            for (size_t b = 0; b < nb.size(); ++b) {
                if (a == b) continue;
                int u = nb[a], w = nb[b];
                if (g.degree(u) != 3) continue;
                int dw = g.degree(w);
                if (dw != 2 && dw != 3) continue;
                if (g.degree(v) == 3 && dw != 3) continue;  // canonical: (3,2,2),(3,2,3),(3,3,3)
                out.push_back({u, v, w});
            }
    }
    // order: fewest isolated vertices needed first
    std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
        int bx = g.degree(x[1]) + g.degree(x[2]), by = g.degree(y[1]) + g.degree(y[2]);
        return bx < by;
    });
    return out;
}

int isolated_need(const Graph& g, const std::array<int, 3>& t) {
    int s2 = g.degree(t[1]), s3 = g.degree(t[2]);
    if (s2 == 2 && s3 == 2) return 2;  // S=(3,2,2): x=1
    if (s2 == 2 && s3 == 3) return 3;  // S=(3,2,3): x=2
    return 4;                          // S=(3,3,3): x=3
}

// ------------------------------------------------------------------
// lemma 3.3: at least two tree components

std::optional<Placement> lemma33_impl(const Graph& g, Ctx& ctx) {
    auto comps = g.components();
    std::vector<std::vector<int>> trees, cyclic;
    for (auto& c : comps) {
        Graph sub = g.induced(c);
        if (sub.size() == sub.order() - 1) trees.push_back(c);
        else cyclic.push_back(c);
    }
    if (trees.size() < 2 || cyclic.empty()) return std::nullopt;
    std::stable_sort(trees.begin(), trees.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });

    const int n = g.order();

    if (trees[0].size() + trees[1].size() >= 3) {
        // A = T1 (+) T2 (+) {u}, u of maximum degree outside the two trees
        std::set<int> in_trees(trees[0].begin(), trees[0].end());
        in_trees.insert(trees[1].begin(), trees[1].end());
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (!in_trees.count(v) && (u < 0 || g.degree(v) > g.degree(u))) u = v;
        if (u < 0 || g.degree(u) < 3) return std::nullopt;

        std::vector<int> a_verts(trees[0]);
        a_verts.insert(a_verts.end(), trees[1].begin(), trees[1].end());
        a_verts.push_back(u);
        std::sort(a_verts.begin(), a_verts.end());
        std::vector<int> b_verts;
        {
            std::set<int> in_a(a_verts.begin(), a_verts.end());
            for (int v = 0; v < n; ++v)
                if (!in_a.count(v)) b_verts.push_back(v);
        }

        // placement of A with u 4-placed and all trimmed-leaf neighbours
        // 4-placed, built from the small dispersed unions
        auto t1 = trim_tree_to_path(g, trees[0]);
        auto t2 = trim_tree_to_path(g, trees[1]);
        std::optional<Placement> phi_a;   // on induced(a_verts) ids
        std::vector<int> apos(n, -1);
        for (size_t j = 0; j < a_verts.size(); ++j) apos[a_verts[j]] = static_cast<int>(j);
        Graph a_graph = g.induced(a_verts);

        auto assemble_a = [&](const std::vector<int>& order_in_a,
                              const Placement& base,
                              const std::vector<int>& del) -> std::optional<Placement> {
            BlockAssembly blocks(kCopies, a_graph.order() - static_cast<int>(del.size()));
            std::vector<int> del_a;
            for (int d : del) del_a.push_back(apos[d]);
            std::sort(del_a.begin(), del_a.end());
            std::vector<int> redmap;
            Graph a_red = a_graph.removed(del_a, &redmap);
            std::vector<int> to_red(a_graph.order(), -1);
            for (size_t j = 0; j < redmap.size(); ++j) to_red[redmap[j]] = static_cast<int>(j);
            std::vector<int> seq;
            for (int v : order_in_a) seq.push_back(to_red[apos[v]]);
            blocks.add_block(seq, base);
            Placement red = blocks.finish();
            if (!verify(a_red, red).ok) return std::nullopt;
            if (del_a.empty()) return red;
            return attach_leaves_fixed(a_graph, del_a, red);
        };

        if (t1 && t2) {
            // paths route: P_l1 (+) P_l2 (+) K_1(u)
            std::vector<int> order;
            order.insert(order.end(), t1->first.begin(), t1->first.end());
            order.insert(order.end(), t2->first.begin(), t2->first.end());
            order.push_back(u);
            std::vector<int> del = t1->second;
            del.insert(del.end(), t2->second.begin(), t2->second.end());
            int l1 = static_cast<int>(t1->first.size());
            int l2 = static_cast<int>(t2->first.size());
            if (l1 + l2 >= 3) {
                Placement base = paths_plus_k1_placement({l1, l2});
                phi_a = assemble_a(order, base, del);
            }
        }
        if (!phi_a && trees[1].size() == 1) {
            // spider route: Q(n1,n2,n3) (+) 2K_1
            // trim tree[0] to a spider with legs >= 2
            const auto& tv = trees[0];
            int center = -1;
            for (int x : tv)
                if (g.degree(x) >= 3) {
                    if (center >= 0) { center = -2; break; }
                    center = x;
                }
            if (center >= 0) {
                std::vector<std::vector<int>> legs;
                std::vector<int> del;
                bool shape_ok = true;
                for (int r : g.neighbors(center)) {
                    if (g.degree(r) == 1) { del.push_back(r); continue; }
                    HangBranch br;
                    br.attach = center;
                    br.root = r;
                    std::vector<int> stack{r};
                    std::set<int> seen{r, center};
                    while (!stack.empty()) {
                        int x = stack.back(); stack.pop_back();
                        br.verts.push_back(x);
                        for (int y : g.neighbors(x))
                            if (!seen.count(y)) { seen.insert(y); stack.push_back(y); }
                    }
                    auto leg = trim_branch_to_tail(g, br);
                    if (!leg || leg->first.size() < 2) { shape_ok = false; break; }
                    legs.push_back(leg->first);
                    del.insert(del.end(), leg->second.begin(), leg->second.end());
                }
                if (shape_ok && legs.size() == 3) {
                    std::stable_sort(legs.begin(), legs.end(),
                                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
                    int n1 = static_cast<int>(legs[0].size());
                    int n2 = static_cast<int>(legs[1].size());
                    int n3 = static_cast<int>(legs[2].size());
                    std::vector<int> order{center};
                    for (auto& leg : legs) order.insert(order.end(), leg.begin(), leg.end());
                    order.push_back(trees[1][0]);
                    order.push_back(u);
                    Placement base = two_k1_plus_spider(n1, n2, n3);
                    phi_a = assemble_a(order, base, del);
                }
            }
        }
        if (!phi_a) return std::nullopt;
        if (!placed_in(*phi_a, apos[u])) return std::nullopt;

        auto phi_b = claim_3111_place(g, b_verts, ctx);
        if (!phi_b) return std::nullopt;

        ABPartition part;
        part.g = &g;
        part.a_verts = a_verts;
        part.b_verts = b_verts;
        part.a_vertex = apos[u] >= 0 ? std::optional<int>(u) : std::nullopt;
        part.phi_a = *phi_a;
        part.phi_b = *phi_b;
        Placement out = compose_structure(part);
        ctx.log(fmt("lemma33_trees", {static_cast<long long>(trees[0].size()),
                                      static_cast<long long>(trees[1].size())}));
        return out;
    }

    // all tree components are isolated vertices
    std::vector<int> iso;
    for (auto& t : trees) iso.push_back(t[0]);
    std::sort(iso.begin(), iso.end());
    const int a_iso = static_cast<int>(iso.size());

    // (i) many isolated vertices next to a vertex of degree >= 4
    if (a_iso >= 3 && g.max_degree() >= 4) {
        int u = 0;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) > g.degree(u)) u = v;
        std::vector<int> a_verts{iso[0], iso[1], iso[2], u};
        std::sort(a_verts.begin(), a_verts.end());
        std::vector<int> b_verts;
        std::set<int> in_a(a_verts.begin(), a_verts.end());
        for (int v = 0; v < n; ++v)
            if (!in_a.count(v)) b_verts.push_back(v);
        if (auto phi_b = claim_3111_place(g, b_verts, ctx)) {
            // A is 4K_1: place u on four distinct hosts, the rest fill up
            Placement phi_a{kCopies, 4, std::vector<std::vector<int>>(kCopies, std::vector<int>(4))};
            int upos = 0;
            for (int j = 0; j < 4; ++j)
                if (a_verts[j] == u) upos = j;
            for (int i = 0; i < kCopies; ++i) {
                int next = 0;
                for (int j = 0; j < 4; ++j) {
                    if (j == upos) { phi_a.maps[i][j] = i; continue; }
                    while (next == i) ++next;
                    phi_a.maps[i][j] = next++;
                }
            }
            ABPartition part;
            part.g = &g;
            part.a_verts = a_verts;
            part.b_verts = b_verts;
            part.a_vertex = u;
            part.phi_a = phi_a;
            part.phi_b = *phi_b;
            Placement out = compose_structure(part);
            ctx.log(fmt("lemma33_iso_deg4", {a_iso, g.degree(u)}));
            return out;
        }
    }

    // (ii) claim-3112 triples
    for (const auto& t : degree_triples(g)) {
        int need = isolated_need(g, t);
        if (need > a_iso) continue;
        std::vector<int> use(iso.begin(), iso.begin() + need);
        std::vector<int> m_verts = use;
        m_verts.push_back(t[0]);
        m_verts.push_back(t[1]);
        m_verts.push_back(t[2]);
        std::sort(m_verts.begin(), m_verts.end());
        Graph h = g.removed(m_verts);
        auto phi_h = pack4_rec(h, ctx);
        if (!phi_h) continue;
        if (auto res = claim_triple_impl(g, use, t[0], t[1], t[2], *phi_h, ctx)) return res;
    }

    // (iii) a bare double lasso component: pack it alone, recurse on the rest
    if (a_iso >= 2) {
        for (auto& c : cyclic) {
            Graph sub = g.induced(c);
            if (sub.size() != sub.order() + 1) continue;
            if (sub.max_degree() > 4 || sub.min_degree() < 2) continue;
            // bare double lasso
            std::vector<int> rest;
            std::set<int> in_c(c.begin(), c.end());
            for (int v = 0; v < n; ++v)
                if (!in_c.count(v)) rest.push_back(v);
            Graph rest_g = g.induced(rest);
            std::optional<Placement> phi_rest;
            if (rest_g.size() == 0 && rest_g.order() <= 4) {
                // isolated vertices only
                Placement triv{kCopies, rest_g.order(),
                               std::vector<std::vector<int>>(kCopies, std::vector<int>(rest_g.order()))};
                for (int i = 0; i < kCopies; ++i)
                    for (int j = 0; j < rest_g.order(); ++j) triv.maps[i][j] = j;
                phi_rest = triv;
            } else {
                // join two isolated vertices to recover an (l, l-1)-graph
                int i1 = -1, i2 = -1;
                for (size_t j = 0; j < rest.size(); ++j) {
                    if (rest_g.degree(static_cast<int>(j)) == 0) {
                        if (i1 < 0) i1 = static_cast<int>(j);
                        else if (i2 < 0) i2 = static_cast<int>(j);
                    }
                }
                if (i1 < 0 || i2 < 0) continue;
                Graph joined = rest_g.with_edge(i1, i2);
                phi_rest = pack4_rec(joined, ctx);
                if (phi_rest && !verify(rest_g, *phi_rest).ok) phi_rest.reset();
            }
            if (!phi_rest) continue;
            // pack the double lasso by its labeling
            try {
                Placement dl = pack_n_plus_one(sub, kCopies);
                BlockAssembly blocks(kCopies, n);
                std::vector<int> cseq(c.begin(), c.end());
                blocks.add_block(cseq, dl);
                blocks.add_block(rest, *phi_rest);
                Placement out = blocks.finish();
                if (verify(g, out).ok) {
                    ctx.log(fmt("lemma33_bare_dlasso", {sub.order()}));
                    return out;
                }
            } catch (const std::exception&) {
            }
        }
    }

    // (iv) a_iso == 2 with a high-degree vertex: detach one pendant subtree
    if (g.max_degree() >= 4) {
        for (int v = 0; v < n && a_iso >= 2; ++v) {
            if (g.degree(v) < 4) continue;
            // branches at v that avoid all cycles: candidate pendant subtrees
            for (int r : g.neighbors(v)) {
                std::vector<int> tvs{};
                std::vector<int> stack{r};
                std::set<int> seen{r, v};
                bool touches_cycle = false;
                while (!stack.empty()) {
                    int x = stack.back();
                    stack.pop_back();
                    tvs.push_back(x);
                    for (int y : g.neighbors(x))
                        if (!seen.count(y)) { seen.insert(y); stack.push_back(y); }
                }
                Graph tsub = g.induced(tvs);
                if (tsub.size() != tsub.order() - 1) touches_cycle = true;  // not a tree
                // v's other edges must all stay in B
                if (touches_cycle) continue;
                std::vector<int> a_verts = tvs;
                a_verts.push_back(v);
                a_verts.push_back(iso[0]);
                a_verts.push_back(iso[1]);
                std::sort(a_verts.begin(), a_verts.end());
                std::set<int> in_a(a_verts.begin(), a_verts.end());
                std::vector<int> b_verts;
                for (int x = 0; x < n; ++x)
                    if (!in_a.count(x)) b_verts.push_back(x);
                // A placement: subtree+v trimmed to a path or searched
                Graph a_graph = g.induced(a_verts);
                std::vector<int> apos(n, -1);
                for (size_t j = 0; j < a_verts.size(); ++j) apos[a_verts[j]] = static_cast<int>(j);
                std::vector<int> need{apos[v]};
                std::optional<Placement> phi_a;
                if (a_graph.order() <= 12) {
                    SearchOptions opts;
                    opts.must_place = need;
                    SearchBudget bud = ctx.budget;
                    bud.node_limit = std::min<std::uint64_t>(bud.node_limit, 20'000'000);
                    auto r2 = brute_force_pack(a_graph, kCopies, bud, opts);
                    if (r2.verdict == SearchVerdict::Found) phi_a = r2.placement;
                } else {
                    std::vector<int> tree_with_v = tvs;
                    tree_with_v.push_back(v);
                    std::sort(tree_with_v.begin(), tree_with_v.end());
                    if (auto tp = trim_tree_to_path(g, tree_with_v)) {
                        std::vector<int> order;
                        order.insert(order.end(), tp->first.begin(), tp->first.end());
                        order.push_back(iso[0]);
                        order.push_back(iso[1]);
                        int lp = static_cast<int>(tp->first.size());
                        if (lp >= 2) {
                            Placement base = paths_plus_k1_placement({lp, 1});
                            BlockAssembly blocks(kCopies,
                                                 static_cast<int>(order.size()));
                            std::vector<int> seq;
                            std::vector<int> del_a;
                            for (int d : tp->second) del_a.push_back(apos[d]);
                            std::sort(del_a.begin(), del_a.end());
                            std::vector<int> redmap;
                            Graph a_red = a_graph.removed(del_a, &redmap);
                            std::vector<int> to_red(a_graph.order(), -1);
                            for (size_t j = 0; j < redmap.size(); ++j)
                                to_red[redmap[j]] = static_cast<int>(j);
                            for (int x : order) seq.push_back(to_red[apos[x]]);
                            BlockAssembly blocks2(kCopies, a_red.order());
                            blocks2.add_block(seq, base);
                            Placement red = blocks2.finish();
                            if (verify(a_red, red).ok) {
                                if (del_a.empty()) phi_a = red;
                                else phi_a = attach_leaves_fixed(a_graph, del_a, red);
                            }
                        }
                    }
                }
                if (!phi_a || !placed_in(*phi_a, apos[v])) continue;
                auto phi_b = claim_3111_place(g, b_verts, ctx);
                if (!phi_b) continue;
                ABPartition part;
                part.g = &g;
                part.a_verts = a_verts;
                part.b_verts = b_verts;
                part.a_vertex = v;
                part.phi_a = *phi_a;
                part.phi_b = *phi_b;
                try {
                    Placement out = compose_structure(part);
                    ctx.log(fmt("lemma33_pendant", {g.degree(v)}));
                    return out;
                } catch (const std::exception&) {
                }
            }
        }
    }
    return std::nullopt;
}

// ------------------------------------------------------------------
// main case split on the reduced graph G'

struct CompShape {
    std::vector<int> verts;
    std::vector<int> cycle;              // empty for trees
    std::vector<HangBranch> branches;
};

// good placement of G' with all `targets` 4-placed; everything in reduced ids
std::optional<Placement> good_placement(const Graph& gp, const std::set<int>& targets, Ctx& ctx);

std::optional<Placement> case_dispatch_impl(const LeafDeletionRecord& rec, Ctx& ctx) {
    const Graph& g = rec.original;
    const Graph& gp = rec.reduced;
    std::vector<int> old_to_new(g.order(), -1);
    for (size_t j = 0; j < rec.kept_map.size(); ++j)
        old_to_new[rec.kept_map[j]] = static_cast<int>(j);
    std::set<int> targets;
    std::vector<int> deleted;
    for (const auto& [leaf, nb] : rec.deleted) {
        deleted.push_back(leaf);
        targets.insert(old_to_new[nb]);
    }
    std::sort(deleted.begin(), deleted.end());
    auto phi = good_placement(gp, targets, ctx);
    if (!phi) return std::nullopt;
    for (int t : targets)
        if (!placed_in(*phi, t)) return std::nullopt;
    Placement full = deleted.empty() ? *phi : attach_leaves_fixed(g, deleted, *phi);
    if (!verify(g, full).ok) return std::nullopt;
    return full;
}

// place one lasso/cycle component (plus an optional absorbed extra vertex and
// an optional appended path) into the assembly; returns false when no
// orientation dodges the targets
bool place_lasso_like(BlockAssembly& blocks, const Graph& gp, const CompShape& comp,
                      const std::set<int>& targets, const std::vector<int>& extra_tail,
                      std::optional<int> absorb_k1) {
    const auto& cycle = comp.cycle;
    const int s = static_cast<int>(cycle.size());
    if (s < 9) return false;
    std::vector<int> tail;
    int attach_idx = 0;
    if (!comp.branches.empty()) {
        if (comp.branches.size() != 1) return false;
        auto t = trim_branch_to_tail(gp, comp.branches[0]);
        if (!t || !t->second.empty()) return false;
        tail = t->first;
        for (int i = 0; i < s; ++i)
            if (cycle[i] == comp.branches[0].attach) attach_idx = i;
    }
    tail.insert(tail.end(), extra_tail.begin(), extra_tail.end());
    if (absorb_k1) tail.push_back(*absorb_k1);
    for (int dir : {1, -1}) {
        int v1 = cycle[((attach_idx + dir) % s + s) % s];
        if (targets.count(v1)) continue;
        std::vector<int> seq = make_lasso_seq(cycle, attach_idx, dir, tail);
        int l = static_cast<int>(seq.size());
        if (l == s) {
            blocks.add_block(seq, cycle_placement(s, kCopies));
        } else {
            blocks.add_block(seq, lasso_placement(l, s, kCopies));
        }
        return true;
    }
    return false;
}

// B-side helper: K_1 (+) hanging forest placed inside one block with every
// branch vertex that is a target 4-placed. Branch forests are either unions
// of paths (dispersed small-union machinery) or contain one branching tree
// (closed through the isolated vertex into a lasso, or searched when small).
std::optional<Placement> place_k1_plus_forest(const Graph& gp,
                                              const std::vector<std::vector<int>>& paths,
                                              const std::vector<std::vector<int>>& branch_trees,
                                              int k1, const std::set<int>& targets, Ctx& ctx,
                                              std::vector<int>* order_out) {
    // vertex order inside the block: paths first, then branching trees, then K_1
    std::vector<int> order;
    for (const auto& p : paths) order.insert(order.end(), p.begin(), p.end());
    for (const auto& t : branch_trees) order.insert(order.end(), t.begin(), t.end());
    order.push_back(k1);
    *order_out = order;

    if (branch_trees.empty()) {
        std::vector<int> lens;
        for (const auto& p : paths) lens.push_back(static_cast<int>(p.size()));
        if (lens.size() < 2 || std::accumulate(lens.begin(), lens.end(), 0) < 3) return std::nullopt;
        return paths_plus_k1_placement(lens);
    }
    // a single branching tree: try the closure through K_1, else search
    if (branch_trees.size() == 1) {
        const auto& tree = branch_trees[0];
        // interpret as a spider: find its unique branch vertex
        std::set<int> in_tree(tree.begin(), tree.end());
        int center = -1;
        bool simple = true;
        for (int v : tree) {
            int d = 0;
            for (int w : gp.neighbors(v)) d += in_tree.count(w) ? 1 : 0;
            if (d >= 3) {
                if (center >= 0) simple = false;
                center = v;
            }
        }
        if (simple && center >= 0) {
            std::vector<std::vector<int>> legs;
            for (int r : gp.neighbors(center)) {
                if (!in_tree.count(r)) continue;
                std::vector<int> leg{r};
                int prev = center, cur = r;
                while (true) {
                    int nxt = -1;
                    for (int w : gp.neighbors(cur))
                        if (w != prev && in_tree.count(w)) { nxt = w; break; }
                    if (nxt < 0) break;
                    leg.push_back(nxt);
                    prev = cur;
                    cur = nxt;
                }
                legs.push_back(leg);
            }
            if (legs.size() == 3) {
                // close the two longest legs through K_1 when big enough
                std::stable_sort(legs.begin(), legs.end(),
                                 [](const auto& a, const auto& b) { return a.size() > b.size(); });
                int p = static_cast<int>(legs[0].size());
                int q = static_cast<int>(legs[1].size());
                if (p + q >= 7 && p >= 3) {
                    // cycle: center, leg0..., k1, ...reversed leg1, back to center
                    std::vector<int> cyc{center};
                    cyc.insert(cyc.end(), legs[0].begin(), legs[0].end());
                    cyc.push_back(k1);
                    cyc.insert(cyc.end(), legs[1].rbegin(), legs[1].rend());
                    // tail = third leg, then append the path parts
                    std::vector<int> tail = legs[2];
                    for (const auto& pth : paths) tail.insert(tail.end(), pth.begin(), pth.end());
                    int sidx = 0;  // center position in cyc
                    std::set<int> tset = targets;
                    for (int dir : {1, -1}) {
                        int sc = static_cast<int>(cyc.size());
                        int v1 = cyc[((sidx + dir) % sc + sc) % sc];
                        if (tset.count(v1)) continue;
                        std::vector<int> seq = make_lasso_seq(cyc, sidx, dir, tail);
                        BlockAssembly blocks(kCopies, static_cast<int>(seq.size()));
                        blocks.add_block(seq, lasso_placement(static_cast<int>(seq.size()),
                                                              static_cast<int>(cyc.size()), kCopies));
                        Placement out = blocks.finish();
                        // remap to the declared order
                        std::vector<int> pos_in_seq(gp.order(), -1);
                        for (size_t j = 0; j < seq.size(); ++j) pos_in_seq[seq[j]] = static_cast<int>(j);
                        Placement rel{kCopies, out.n_host,
                                      std::vector<std::vector<int>>(kCopies,
                                                                    std::vector<int>(order.size()))};
                        for (int i = 0; i < kCopies; ++i)
                            for (size_t j = 0; j < order.size(); ++j)
                                rel.maps[i][j] = out.maps[i][pos_in_seq[order[j]]];
                        return rel;
                    }
                }
            }
        }
    }
    // small fallback: constrained search on the block
    if (order.size() <= 12) {
        std::vector<int> mp;
        for (int t : targets)
            if (std::find(order.begin(), order.end(), t) != order.end()) mp.push_back(t);
        auto r = block_search(gp, order, mp, ctx);
        if (r) return r;
    }
    return std::nullopt;
}

std::optional<Placement> good_placement(const Graph& gp, const std::set<int>& targets, Ctx& ctx) {
    auto comps = gp.components();
    std::vector<std::vector<int>> tree_comps;
    std::vector<CompShape> cyc_comps;
    for (auto& c : comps) {
        Graph sub = gp.induced(c);
        if (sub.size() == sub.order() - 1) {
            tree_comps.push_back(c);
        } else {
            CompShape shape;
            shape.verts = c;
            shape.cycle = find_cycle(gp, c);
            shape.branches = branches_of(gp, c, shape.cycle);
            cyc_comps.push_back(std::move(shape));
        }
    }
    if (tree_comps.size() != 1) return std::nullopt;
    const auto& tverts = tree_comps[0];
    Graph tsub = gp.induced(tverts);

    // ---------------- Case 1: the reduced tree is a path of order >= 2
    if (tverts.size() >= 2 && tsub.max_degree() <= 2) {
        // path order within gp
        auto tp = trim_tree_to_path(gp, tverts);
        if (!tp || !tp->second.empty()) return std::nullopt;
        const std::vector<int>& path = tp->first;
        // merge the path into the (unique) non-cycle component, or any cycle
        int host_comp = -1;
        for (size_t i = 0; i < cyc_comps.size(); ++i)
            if (!cyc_comps[i].branches.empty()) {
                if (host_comp >= 0) return std::nullopt;  // more than one lasso: unexpected
                host_comp = static_cast<int>(i);
            }
        if (host_comp < 0) host_comp = 0;
        BlockAssembly blocks(kCopies, gp.order());
        if (!place_lasso_like(blocks, gp, cyc_comps[host_comp], targets, path, std::nullopt))
            return std::nullopt;
        for (size_t i = 0; i < cyc_comps.size(); ++i) {
            if (static_cast<int>(i) == host_comp) continue;
            if (!place_lasso_like(blocks, gp, cyc_comps[i], targets, {}, std::nullopt))
                return std::nullopt;
        }
        Placement out = blocks.finish();
        if (!verify(gp, out).ok) return std::nullopt;
        ctx.log(fmt("case1_path", {static_cast<long long>(path.size())}));
        return out;
    }

    // ---------------- Case 1: the reduced tree is a spider Q(n1,n2,n3)
    if (tverts.size() >= 2) {
        int center = -1;
        bool one_center = true;
        for (int v : tverts) {
            if (gp.degree(v) >= 3) {
                if (center >= 0) one_center = false;
                center = v;
            }
        }
        if (!one_center || center < 0) return std::nullopt;
        std::vector<std::vector<int>> legs;
        for (int r : gp.neighbors(center)) {
            std::vector<int> leg{r};
            int prev = center, cur = r;
            while (true) {
                int nxt = -1;
                for (int w : gp.neighbors(cur))
                    if (w != prev) { nxt = w; break; }
                if (nxt < 0) break;
                leg.push_back(nxt);
                prev = cur;
                cur = nxt;
            }
            legs.push_back(leg);
        }
        if (legs.size() != 3) return std::nullopt;
        std::stable_sort(legs.begin(), legs.end(),
                         [](const auto& a, const auto& b) { return a.size() < b.size(); });
        int n1 = static_cast<int>(legs[0].size());
        int n2 = static_cast<int>(legs[1].size());
        int n3 = static_cast<int>(legs[2].size());
        if (n1 < 2) return std::nullopt;
        // all other components must be bare cycles
        for (auto& cc : cyc_comps)
            if (!cc.branches.empty()) return std::nullopt;
        if (cyc_comps.empty()) return std::nullopt;

        BlockAssembly blocks(kCopies, gp.order());
        const auto& c0 = cyc_comps[0];
        int s = static_cast<int>(c0.cycle.size());
        bool rewire = n3 >= 3;
        if (!rewire) {
            // C_s (+) Q(2,2,2) has a dispersed placement
            Placement cs = cycle_plus_spider(s);
            std::vector<int> seq = c0.cycle;
            seq.push_back(center);
            for (auto& leg : legs) seq.insert(seq.end(), leg.begin(), leg.end());
            blocks.add_block(seq, cs);
        } else {
            // open the cycle at u_2 and run it through legs 2 and 3; u_2
            // returns pinned between the images of its old neighbours
            std::vector<int> cyc = c0.cycle;
            int u2 = cyc[1];
            std::vector<int> seq;
            seq.insert(seq.end(), legs[2].begin(), legs[2].end());   // v_1^3..tip
            seq.push_back(cyc[0]);                                   // u_1
            for (int j = static_cast<int>(cyc.size()) - 1; j >= 2; --j) seq.push_back(cyc[j]);
            for (int j = n2 - 1; j >= 0; --j) seq.push_back(legs[1][j]);
            seq.push_back(center);                                   // v_s'
            seq.insert(seq.end(), legs[0].begin(), legs[0].end());   // tail = leg 1
            int sp = n2 + n3 + s;
            int lp = n1 + n2 + n3 + s;
            blocks.add_block(seq, lasso_placement(lp, sp, kCopies));
            blocks.add_fixed(u2);
        }
        for (size_t i = 1; i < cyc_comps.size(); ++i)
            if (!place_lasso_like(blocks, gp, cyc_comps[i], targets, {}, std::nullopt))
                return std::nullopt;
        Placement out = blocks.finish();
        if (!verify(gp, out).ok) return std::nullopt;
        ctx.log(fmt(rewire ? "case1_spider_rewire" : "case1_spider", {n1, n2, n3, s}));
        return out;
    }

    // ---------------- Case 2: the reduced tree is K_1
    const int kd = tverts[0];

    // easy shape: every component is a cycle or a lasso
    {
        bool easy = true;
        for (auto& cc : cyc_comps) {
            if (cc.branches.empty()) continue;
            if (cc.branches.size() != 1) { easy = false; break; }
            auto t = trim_branch_to_tail(gp, cc.branches[0]);
            if (!t || !t->second.empty()) { easy = false; break; }
        }
        if (easy) {
            BlockAssembly blocks(kCopies, gp.order());
            bool ok = true;
            for (size_t i = 0; i < cyc_comps.size(); ++i) {
                std::optional<int> absorb = i == 0 ? std::optional<int>(kd) : std::nullopt;
                if (!place_lasso_like(blocks, gp, cyc_comps[i], targets, {}, absorb)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                Placement out = blocks.finish();
                if (verify(gp, out).ok) {
                    ctx.log(fmt("case2_easy", {static_cast<long long>(cyc_comps.size())}));
                    return out;
                }
            }
        }
    }

    // decorated components
    std::vector<int> decorated;
    for (size_t i = 0; i < cyc_comps.size(); ++i)
        if (!cyc_comps[i].branches.empty()) decorated.push_back(static_cast<int>(i));

    // single decorated component: (A,U,B)-structures per the number of attach
    // points
    if (decorated.size() == 1) {
        const CompShape& cc = cyc_comps[decorated[0]];
        std::set<int> attach_set;
        for (const auto& b : cc.branches) attach_set.insert(b.attach);
        std::vector<int> attach(attach_set.begin(), attach_set.end());
        const int s = static_cast<int>(cc.cycle.size());

        auto place_rest_cycles = [&](BlockAssembly& blocks) {
            for (size_t i = 0; i < cyc_comps.size(); ++i) {
                if (static_cast<int>(i) == decorated[0]) continue;
                if (!place_lasso_like(blocks, gp, cyc_comps[i], targets, {}, std::nullopt))
                    return false;
            }
            return true;
        };

        if (attach.size() == 1) {
            int u1 = attach[0];
            // A = C_s with a := u_1 4-placed, B = K_1 (+) branches
            std::vector<std::vector<int>> paths, branchy;
            for (const auto& b : cc.branches) {
                auto t = trim_branch_to_tail(gp, b);
                if (t && t->second.empty()) paths.push_back(t->first);
                else branchy.push_back(b.verts);
            }
            std::vector<int> order;
            auto phi_b = place_k1_plus_forest(gp, paths, branchy, kd, targets, ctx, &order);
            if (phi_b) {
                // orient the cycle so the pinned vertex avoids u_1 and targets
                int u1_idx = 0;
                for (int i = 0; i < s; ++i)
                    if (cc.cycle[i] == u1) u1_idx = i;
                for (int shift = 1; shift < s; ++shift) {
                    int v1 = cc.cycle[(u1_idx + shift) % s];
                    if (v1 == u1 || targets.count(v1)) continue;
                    // cycle sequence with v_1 first: rotate so that the pinned
                    // vertex of cycle_placement (index 0) is v1
                    BlockAssembly blocks(kCopies, gp.order());
                    std::vector<int> cyc_seq = make_lasso_seq(cc.cycle, (u1_idx + shift) % s, 1, {});
                    // make_lasso_seq puts the branch vertex last; for a bare
                    // cycle block we want v_1 = position 0 of cycle_graph ids
                    std::vector<int> seq;
                    seq.push_back(v1);
                    int pos_v1 = (u1_idx + shift) % s;
                    for (int j = 1; j < s; ++j) seq.push_back(cc.cycle[(pos_v1 + j) % s]);
                    // cycle_graph(l) pins vertex 0? cycle_placement pins v_1
                    // which is id 0 in lasso_graph(l,l)
                    blocks.add_block(seq, cycle_placement(s, kCopies));
                    blocks.add_block(order, *phi_b);
                    if (!place_rest_cycles(blocks)) break;
                    Placement out = blocks.finish();
                    if (verify(gp, out).ok && placed_in(out, u1)) {
                        ctx.log(fmt("case2_m1", {s}));
                        return out;
                    }
                }
            }
            // alternative: absorb the longest path branch as a lasso tail and
            // search/place the rest
            if (!phi_b && !cc.branches.empty()) {
                // pick a path branch as tail
                for (size_t tb = 0; tb < cc.branches.size(); ++tb) {
                    auto t = trim_branch_to_tail(gp, cc.branches[tb]);
                    if (!t || !t->second.empty()) continue;
                    std::vector<std::vector<int>> paths2, branchy2;
                    for (size_t j = 0; j < cc.branches.size(); ++j) {
                        if (j == tb) continue;
                        auto t2 = trim_branch_to_tail(gp, cc.branches[j]);
                        if (t2 && t2->second.empty()) paths2.push_back(t2->first);
                        else branchy2.push_back(cc.branches[j].verts);
                    }
                    std::vector<int> order2;
                    auto phi_b2 =
                        place_k1_plus_forest(gp, paths2, branchy2, kd, targets, ctx, &order2);
                    if (!phi_b2) continue;
                    CompShape lasso_shape;
                    lasso_shape.verts = cc.verts;
                    lasso_shape.cycle = cc.cycle;
                    lasso_shape.branches = {cc.branches[tb]};
                    BlockAssembly blocks(kCopies, gp.order());
                    if (!place_lasso_like(blocks, gp, lasso_shape, targets, {}, std::nullopt))
                        continue;
                    blocks.add_block(order2, *phi_b2);
                    if (!place_rest_cycles(blocks)) continue;
                    Placement out = blocks.finish();
                    if (verify(gp, out).ok && placed_in(out, u1)) {
                        ctx.log(fmt("case2_m1_absorb", {s}));
                        return out;
                    }
                }
            }
        }

        if (attach.size() == 2) {
            // A = C_s with U = {u} pinned on the cycle (u single-branch),
            // B = K_1 (+) all branches
            for (int pick = 0; pick < 2; ++pick) {
                int u = attach[pick], other = attach[1 - pick];
                int u_branches = 0;
                for (const auto& b : cc.branches) u_branches += b.attach == u ? 1 : 0;
                if (u_branches != 1 || targets.count(u)) continue;
                std::vector<std::vector<int>> paths, branchy;
                bool pathsok = true;
                for (const auto& b : cc.branches) {
                    auto t = trim_branch_to_tail(gp, b);
                    if (t && t->second.empty()) paths.push_back(t->first);
                    else pathsok = false;
                }
                if (!pathsok) continue;
                std::vector<int> order;
                auto phi_b = place_k1_plus_forest(gp, paths, {}, kd, targets, ctx, &order);
                if (!phi_b || !dispersed(*phi_b)) continue;
                // cycle with v_1 = u (pinned)
                int u_idx = 0;
                for (int i = 0; i < s; ++i)
                    if (cc.cycle[i] == u) u_idx = i;
                BlockAssembly blocks(kCopies, gp.order());
                std::vector<int> seq;
                seq.push_back(u);
                for (int j = 1; j < s; ++j) seq.push_back(cc.cycle[(u_idx + j) % s]);
                blocks.add_block(seq, cycle_placement(s, kCopies));
                blocks.add_block(order, *phi_b);
                if (!place_rest_cycles(blocks)) continue;
                Placement out = blocks.finish();
                if (verify(gp, out).ok && placed_in(out, other)) {
                    ctx.log(fmt("case2_m2_pin", {s}));
                    return out;
                }
            }
            // absorb one single branch as a lasso tail, a := the other attach
            for (int pick = 0; pick < 2; ++pick) {
                int u = attach[pick];
                std::vector<const HangBranch*> ub, ob;
                for (const auto& b : cc.branches)
                    (b.attach == u ? ub : ob).push_back(&b);
                if (ub.size() != 1) continue;
                auto t = trim_branch_to_tail(gp, *ub[0]);
                if (!t || !t->second.empty()) continue;
                std::vector<std::vector<int>> paths, branchy;
                bool pathsok = true;
                for (auto* b : ob) {
                    auto t2 = trim_branch_to_tail(gp, *b);
                    if (t2 && t2->second.empty()) paths.push_back(t2->first);
                    else branchy.push_back(b->verts);
                }
                (void)pathsok;
                std::vector<int> order;
                auto phi_b = place_k1_plus_forest(gp, paths, branchy, kd, targets, ctx, &order);
                if (!phi_b) continue;
                CompShape lasso_shape;
                lasso_shape.verts = cc.verts;
                lasso_shape.cycle = cc.cycle;
                lasso_shape.branches = {*ub[0]};
                BlockAssembly blocks(kCopies, gp.order());
                if (!place_lasso_like(blocks, gp, lasso_shape, targets, {}, std::nullopt)) continue;
                blocks.add_block(order, *phi_b);
                if (!place_rest_cycles(blocks)) continue;
                Placement out = blocks.finish();
                if (verify(gp, out).ok) {
                    ctx.log(fmt("case2_m2_absorb", {s}));
                    return out;
                }
            }
        }

        if (attach.size() == 3) {
            // A = L(s+n_a, s) via one branch, U = {root of a second branch},
            // B = K_1 (+) (second branch - root) (+) third branch
            std::vector<const HangBranch*> bs;
            for (const auto& b : cc.branches) bs.push_back(&b);
            if (bs.size() != 3) return std::nullopt;
            std::vector<std::vector<int>> tails(3);
            for (int j = 0; j < 3; ++j) {
                auto t = trim_branch_to_tail(gp, *bs[j]);
                if (!t || !t->second.empty()) return std::nullopt;
                tails[j] = t->first;
            }
            for (int tail_i = 0; tail_i < 3; ++tail_i)
                for (int u_i = 0; u_i < 3; ++u_i) {
                    if (u_i == tail_i) continue;
                    int m_i = 3 - tail_i - u_i;
                    if (tails[u_i].size() < 2) continue;
                    int u_root = tails[u_i].front();
                    if (targets.count(u_root)) continue;
                    std::vector<int> brest(tails[u_i].begin() + 1, tails[u_i].end());
                    std::vector<std::vector<int>> paths{brest, tails[m_i]};
                    std::vector<int> order;
                    auto phi_b = place_k1_plus_forest(gp, paths, {}, kd, targets, ctx, &order);
                    if (!phi_b || !dispersed(*phi_b)) continue;
                    // lasso A with tail tail_i; pin away from the attach points
                    int attach_idx = 0;
                    for (int i = 0; i < s; ++i)
                        if (cc.cycle[i] == bs[tail_i]->attach) attach_idx = i;
                    for (int dir : {1, -1}) {
                        int v1 = cc.cycle[((attach_idx + dir) % s + s) % s];
                        if (targets.count(v1) || v1 == bs[u_i]->attach || v1 == bs[m_i]->attach)
                            continue;
                        BlockAssembly blocks(kCopies, gp.order());
                        std::vector<int> seq = make_lasso_seq(cc.cycle, attach_idx, dir, tails[tail_i]);
                        blocks.add_block(seq,
                                         lasso_placement(static_cast<int>(seq.size()), s, kCopies));
                        blocks.add_fixed(u_root);
                        blocks.add_block(order, *phi_b);
                        if (!place_rest_cycles(blocks)) continue;
                        Placement out = blocks.finish();
                        if (verify(gp, out).ok) {
                            ctx.log(fmt("case2_m3", {s}));
                            return out;
                        }
                    }
                }
        }
    }

    // two decorated components: lasso (+) torn path against lasso (+) K_1
    if (decorated.size() == 2) {
        for (int a_side = 0; a_side < 2; ++a_side) {
            const CompShape& ca = cyc_comps[decorated[a_side]];
            const CompShape& cb = cyc_comps[decorated[1 - a_side]];
            // component A must reduce to one lasso (single path branch)
            if (ca.branches.size() != 1) continue;
            auto ta = trim_branch_to_tail(gp, ca.branches[0]);
            if (!ta || !ta->second.empty()) continue;
            // component B: one branch stays as its tail, at most one extra is
            // torn off and appended to A's tail (cross edge from its root)
            for (size_t keep = 0; keep < cb.branches.size(); ++keep) {
                auto tb = trim_branch_to_tail(gp, cb.branches[keep]);
                if (!tb || !tb->second.empty()) continue;
                std::vector<std::vector<int>> torn;
                bool ok = true;
                for (size_t j = 0; j < cb.branches.size(); ++j) {
                    if (j == keep) continue;
                    auto tt = trim_branch_to_tail(gp, cb.branches[j]);
                    if (!tt || !tt->second.empty()) { ok = false; break; }
                    torn.push_back(tt->first);
                }
                if (!ok || torn.size() > 1) continue;
                std::vector<int> extra = torn.empty() ? std::vector<int>{} : torn[0];
                CompShape a_shape = ca;
                CompShape b_shape = cb;
                b_shape.branches = {cb.branches[keep]};
                BlockAssembly blocks(kCopies, gp.order());
                if (!place_lasso_like(blocks, gp, a_shape, targets, extra, std::nullopt)) continue;
                if (!place_lasso_like(blocks, gp, b_shape, targets, {}, kd)) continue;
                bool rest_ok = true;
                for (size_t i = 0; i < cyc_comps.size(); ++i) {
                    if (static_cast<int>(i) == decorated[0] || static_cast<int>(i) == decorated[1])
                        continue;
                    if (!place_lasso_like(blocks, gp, cyc_comps[i], targets, {}, std::nullopt)) {
                        rest_ok = false;
                        break;
                    }
                }
                if (!rest_ok) continue;
                Placement out = blocks.finish();
                if (verify(gp, out).ok) {
                    ctx.log(fmt("case2_two_comps", {static_cast<long long>(torn.size())}));
                    return out;
                }
            }
        }
    }

    // last resort: bounded search on the whole reduced graph
    if (gp.order() <= 16) {
        std::vector<int> all(gp.order());
        std::iota(all.begin(), all.end(), 0);
        std::vector<int> mp(targets.begin(), targets.end());
        if (auto r = block_search(gp, all, mp, ctx)) {
            ctx.log(fmt("case2_search", {gp.order()}));
            return r;
        }
    }
    return std::nullopt;
}

// ------------------------------------------------------------------
// dispatch

std::optional<Placement> disconnected_pack4(const Graph& g, Ctx& ctx) {
    const int n = g.order();

    if (n <= 13) {
        if (auto r = lemma31_impl(g, ctx)) return r;
        SearchResult sr = brute_force_pack(g, kCopies, ctx.budget);
        if (sr.verdict == SearchVerdict::Found) {
            ctx.log(fmt("oracle_small", {n}));
            return sr.placement;
        }
        return std::nullopt;
    }

    // four leaves with distinct neighbours (equivalently, four nodes)
    {
        std::vector<int> node_list = g.nodes();
        if (node_list.size() >= 4) {
            std::stable_sort(node_list.begin(), node_list.end(),
                             [&](int a, int b) { return g.degree(a) > g.degree(b); });
            std::vector<int> leaves;
            for (int u : node_list) {
                if (static_cast<int>(leaves.size()) == kCopies) break;
                for (int w : g.neighbors(u))
                    if (g.degree(w) == 1) {
                        leaves.push_back(w);
                        break;
                    }
            }
            if (static_cast<int>(leaves.size()) == kCopies) {
                std::vector<int> keep_map;
                Graph h = g.removed(leaves, &keep_map);
                if (h.max_degree() <= h.order() - 4) {
                    if (auto rec = pack4_rec(h, ctx)) {
                        Placement full = extend_by_leaves(g, leaves, *rec);
                        if (verify(g, full).ok) {
                            ctx.log(fmt("lemma32", {n}));
                            return full;
                        }
                    }
                }
            }
        }
    }

    // at least two tree components
    {
        int tree_count = 0;
        for (auto& c : g.components()) {
            Graph sub = g.induced(c);
            if (sub.size() == sub.order() - 1) ++tree_count;
        }
        if (tree_count >= 2) {
            if (auto r = lemma33_impl(g, ctx)) {
                ctx.log(fmt("lemma33", {n}));
                return r;
            }
        }
    }

    // main reduction
    {
        LeafDeletionRecord rec = delete_leaves_priority(g);
        if (auto r = case_dispatch_impl(rec, ctx)) {
            ctx.log(fmt("case_dispatch", {n, rec.reduced.order()}));
            return r;
        }
    }

    // strip a bare cycle component and recurse
    for (auto& c : g.components()) {
        Graph sub = g.induced(c);
        if (sub.size() != sub.order() || sub.max_degree() != 2) continue;
        int s = sub.order();
        if (s < 9 || s == n) continue;
        std::set<int> in_c(c.begin(), c.end());
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (!in_c.count(v)) rest.push_back(v);
        Graph rest_g = g.induced(rest);
        if (auto phi_rest = pack4_rec(rest_g, ctx)) {
            BlockAssembly blocks(kCopies, n);
            std::vector<int> seq{c[0]};
            Graph csub = g.induced(c);
            int prev = 0, cur = csub.neighbors(0)[0];
            while (cur != 0) {
                seq.push_back(c[cur]);
                int nxt = csub.neighbors(cur)[0] == prev ? csub.neighbors(cur)[1]
                                                         : csub.neighbors(cur)[0];
                prev = cur;
                cur = nxt;
            }
            blocks.add_block(seq, cycle_placement(s, kCopies));
            blocks.add_block(rest, *phi_rest);
            Placement out = blocks.finish();
            if (verify(g, out).ok) {
                ctx.log(fmt("strip_cycle", {s}));
                return out;
            }
        }
    }

    // bounded final fallback
    if (n <= 18) {
        SearchBudget bud = ctx.budget;
        bud.node_limit = std::min<std::uint64_t>(bud.node_limit, 50'000'000);
        SearchResult sr = brute_force_pack(g, kCopies, bud);
        if (sr.verdict == SearchVerdict::Found) {
            ctx.log(fmt("oracle_fallback", {n}));
            return sr.placement;
        }
    }
    return std::nullopt;
}

PackOutcome pack4_impl(const Graph& g, Ctx& ctx) {
    PackOutcome out;
    const int n = g.order();
    auto refuse = [&](RefusalReason r) {
        out.refusal = r;
        ctx.log(std::string("REFUSE ") + refusal_name(r));
        out.trace = ctx.trace;
        return out;
    };

    if (g.size() != n - 1) return refuse(RefusalReason::OutsideTheoremScope);
    if (n == 1) {
        out.placement = Placement{kCopies, 1, std::vector<std::vector<int>>(kCopies, {0})};
        out.trace = ctx.trace;
        return out;
    }
    if (n < 8) return refuse(RefusalReason::TooSmall);
    if (n == 8) {
        bool all_even = true;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) % 2) all_even = false;
        if (all_even) return refuse(RefusalReason::ParityObstruction);
    }
    auto gi = g.girth();
    if (gi && *gi < 9) return refuse(RefusalReason::OutsideTheoremScope);
    if (g.max_degree() > n - 4) return refuse(RefusalReason::MaxDegreeTooHigh);
    if (g.connected()) {
        // a connected (n,n-1)-graph is a tree
        if (is_w_member(g, *ctx.catalog)) return refuse(RefusalReason::ExceptionW);
        if (auto r = tree_pack4_impl(g, {}, ctx)) {
            out.placement = std::move(r);
            out.trace = ctx.trace;
            return out;
        }
        // a completed refutation on a tree identifies an exception member
        SearchResult sr = brute_force_pack(g, kCopies, ctx.budget);
        if (sr.verdict == SearchVerdict::Found) {
            out.placement = std::move(sr.placement);
            out.trace = ctx.trace;
            return out;
        }
        if (sr.verdict == SearchVerdict::Impossible)
            return refuse(RefusalReason::ExceptionW);
        return refuse(RefusalReason::SearchExhausted);
    }
    if (auto r = disconnected_pack4(g, ctx)) {
        out.placement = std::move(r);
        out.trace = ctx.trace;
        return out;
    }
    return refuse(RefusalReason::SearchExhausted);
}

std::optional<Placement> pack4_rec(const Graph& g, Ctx& ctx) {
    if (ctx.depth > 64) return std::nullopt;
    ++ctx.depth;
    PackOutcome out = pack4_impl(g, ctx);
    --ctx.depth;
    if (out.placement && !verify(g, *out.placement).ok) return std::nullopt;
    return out.placement;
}

}  // namespace

// ------------------------------------------------------------------
// leaf deletion

LeafDeletionRecord delete_leaves_priority(const Graph& g) {
    LeafDeletionRecord rec;
    rec.original = g;
    std::set<int> deleted;
    auto note_deleted = [&](int leaf) {
        deleted.insert(leaf);
        rec.deleted.emplace_back(leaf, g.neighbors(leaf)[0]);
    };

    for (const auto& comp : g.components()) {
        Graph sub = g.induced(comp);
        bool is_tree_comp = sub.size() == sub.order() - 1;
        if (is_tree_comp && comp.size() == 2) {
            note_deleted(std::max(comp[0], comp[1]));  // K_2 -> K_1
            continue;
        }
        bool handled = false;
        if (!is_tree_comp) {
            // rule (i): reduce to a lasso with a maximal tail if possible
            std::vector<int> cycle = find_cycle(g, comp);
            auto branches = branches_of(g, comp, cycle);
            if (!branches.empty()) {
                int best = -1, best_len = -1;
                std::vector<int> best_del;
                for (size_t j = 0; j < branches.size(); ++j) {
                    bool rest_single = true;
                    std::vector<int> del;
                    for (size_t m = 0; m < branches.size(); ++m) {
                        if (m == j) continue;
                        if (branches[m].verts.size() != 1) { rest_single = false; break; }
                        del.push_back(branches[m].root);
                    }
                    if (!rest_single) continue;
                    auto t = trim_branch_to_tail(g, branches[j]);
                    if (!t) continue;
                    del.insert(del.end(), t->second.begin(), t->second.end());
                    int len = static_cast<int>(t->first.size());
                    if (len > best_len) {
                        best_len = len;
                        best = static_cast<int>(j);
                        best_del = del;
                    }
                }
                if (best >= 0) {
                    for (int d : best_del) note_deleted(d);
                    handled = true;
                }
            } else {
                handled = true;  // bare cycle
            }
        }
        if (handled) continue;
        // rule (ii)
        for (int u : comp) {
            std::vector<int> leaf_nbrs;
            int b_u = 0;
            for (int w : g.neighbors(u)) {
                if (g.degree(w) == 1) leaf_nbrs.push_back(w);
                else ++b_u;
            }
            if (leaf_nbrs.empty()) continue;
            rec.b_values[u] = b_u;
            size_t keep = b_u == 1 ? 1 : 0;
            std::sort(leaf_nbrs.begin(), leaf_nbrs.end());
            for (size_t i = keep; i < leaf_nbrs.size(); ++i) note_deleted(leaf_nbrs[i]);
        }
    }
    std::vector<int> del_list(deleted.begin(), deleted.end());
    rec.reduced = g.removed(del_list, &rec.kept_map);
    std::sort(rec.deleted.begin(), rec.deleted.end());
    return rec;
}

// ------------------------------------------------------------------
// public entry points

PackOutcome pack4(const Graph& g, const WCatalog& catalog, const SearchBudget& budget) {
    Ctx ctx;
    ctx.catalog = &catalog;
    ctx.budget = budget;
    PackOutcome out = pack4_impl(g, ctx);
    if (out.placement) {
        auto repv = verify(g, *out.placement);
        if (!repv.ok) throw std::logic_error("pack4: unverified placement escaped");
    }
    return out;
}

PackOutcome pack4(const Graph& g) {
    return pack4(g, default_w_catalog(), SearchBudget{});
}

PackOutcome tree_pack4(const Graph& t, const WCatalog& catalog, const SearchBudget& budget) {
    Ctx ctx;
    ctx.catalog = &catalog;
    ctx.budget = budget;
    PackOutcome out;
    if (!t.is_tree() || t.order() < 8) {
        out.refusal = RefusalReason::OutsideTheoremScope;
        out.trace = ctx.trace;
        return out;
    }
    return pack4_impl(t, ctx);
}

PackOutcome tree_pack4(const Graph& t) {
    return tree_pack4(t, default_w_catalog(), SearchBudget{});
}

std::optional<Placement> lemma31(const Graph& g) {
    Ctx ctx;
    ctx.catalog = &default_w_catalog();
    return lemma31_impl(g, ctx);
}

std::optional<Placement> lemma33(const Graph& g) {
    Ctx ctx;
    ctx.catalog = &default_w_catalog();
    return lemma33_impl(g, ctx);
}

std::optional<Placement> case2_dispatch(const LeafDeletionRecord& record) {
    Ctx ctx;
    ctx.catalog = &default_w_catalog();
    return case_dispatch_impl(record, ctx);
}

std::optional<Placement> claim_triple_placement(const Graph& g, const std::vector<int>& isolated,
                                                int u, int v, int w, const Placement& phi_h) {
    Ctx ctx;
    ctx.catalog = &default_w_catalog();
    return claim_triple_impl(g, isolated, u, v, w, phi_h, ctx);
}

}  // namespace gpack
