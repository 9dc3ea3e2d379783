// Command-line front end: pack / verify / census / derive-w.
//
// Exit codes: 0 success, 1 parse or usage error, 2 refusal or proven
// impossibility, 3 unknown (budget exhausted). Human-readable text goes to
// stderr; data goes to stdout or the requested output file.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gpack/constructions.hpp"
#include "gpack/graph6.hpp"
#include "gpack/io.hpp"
#include "gpack/oracle.hpp"
#include "gpack/placement.hpp"
#include "gpack/theorem4.hpp"
#include "gpack/fixtures.hpp"

using namespace gpack;

namespace {

GraphFormat parse_format(const std::string& s) {
    if (s == "edges") return GraphFormat::EdgeList;
    if (s == "g6") return GraphFormat::Graph6;
    return GraphFormat::Auto;
}

int cmd_pack(const std::string& input, int k, const std::string& mode, const std::string& fmt,
             std::uint64_t budget_nodes, double budget_seconds, const std::string& out_path) {
    Graph g;
    try {
        g = parse_graph_file(input, parse_format(fmt));
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    }
    SearchBudget budget;
    if (budget_nodes) budget.node_limit = budget_nodes;
    if (budget_seconds > 0) budget.time_limit_s = budget_seconds;

    auto emit = [&](const Placement& p) {
        if (out_path.empty() || out_path == "-") {
            write_placement(std::cout, p);
        } else {
            std::ofstream out(out_path);
            write_placement(out, p);
        }
    };

    const int n = g.order();
    bool theorem_applicable = k == 4 && g.size() == n - 1;

    if (mode == "theorem" || (mode == "auto" && theorem_applicable)) {
        PackOutcome outcome = pack4(g, default_w_catalog(), budget);
        for (const auto& line : outcome.trace) std::cerr << line << "\n";
        if (outcome.ok()) {
            std::cerr << "verdict: placeable (k=4)\n";
            emit(*outcome.placement);
            return 0;
        }
        bool out_of_scope = outcome.refusal == RefusalReason::OutsideTheoremScope;
        if (!out_of_scope || mode == "theorem") {
            std::cerr << "verdict: refused (" << refusal_name(*outcome.refusal) << ")\n";
            return outcome.refusal == RefusalReason::SearchExhausted ? 3 : 2;
        }
        // fall through to the general engines in auto mode
    }

    if (mode != "oracle") {
        // cheap constructive routes first
        try {
            if (g.max_degree() <= 2 && n >= 6 * k - 4) {
                auto r = pack_max_degree_two(g, k);
                if (r.ok) {
                    std::cerr << "verdict: placeable (degree-2 scheme)\n";
                    emit(r.placement);
                    return 0;
                }
            }
        } catch (const std::exception&) {
        }
        try {
            if (k >= 4 && g.size() == n + 1 && g.min_degree() >= 2) {
                auto gi = g.girth();
                if (gi && *gi >= 2 * k + 1) {
                    Placement p = pack_n_plus_one(g, k);
                    std::cerr << "verdict: placeable (double-lasso scheme)\n";
                    emit(p);
                    return 0;
                }
            }
        } catch (const std::exception&) {
        }
    }

    SearchResult r = brute_force_pack(g, k, budget);
    std::cerr << "LEMMA oracle nodes=" << r.nodes << "\n";
    if (r.verdict == SearchVerdict::Found) {
        std::cerr << "verdict: placeable (search)\n";
        emit(*r.placement);
        return 0;
    }
    if (r.verdict == SearchVerdict::Impossible) {
        std::cerr << "verdict: impossible (exhaustive search)\n";
        return 2;
    }
    std::cerr << "verdict: unknown (budget exhausted)\n";
    return 3;
}

int cmd_verify(const std::string& graph_path, const std::string& placement_path,
               const std::string& fmt) {
    Graph g;
    Placement p;
    try {
        g = parse_graph_file(graph_path, parse_format(fmt));
        std::ifstream in(placement_path);
        if (!in) throw ParseError("cannot open " + placement_path);
        p = read_placement(in);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    }
    try {
        auto rep = verify(g, p);
        std::cout << rep.to_json() << "\n";
        return rep.ok ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_census(int n, int q, int k, int girth_min, bool exact, bool connected,
               std::uint64_t budget_nodes, int jobs, const std::string& out_path) {
    FamilyFilter filter;
    filter.girth_min = girth_min;
    filter.exact_edges = exact;
    filter.connected_only = connected;
    SearchBudget budget;
    if (budget_nodes) budget.node_limit = budget_nodes;
    CensusResult res;
    try {
        res = census(n, q, k, filter, budget, jobs);
    } catch (const std::exception& e) {
        std::cerr << "census error: " << e.what() << "\n";
        return 1;
    }
    std::ostringstream body;
    body << "# census n=" << n << " q=" << q << " k=" << k << " girth_min=" << girth_min
         << " exact=" << (exact ? 1 : 0) << " total=" << res.total
         << " exceptions=" << res.exceptions.size() << " unknown=" << res.unknown
         << (res.complete() ? "" : " INCOMPLETE") << "\n";
    for (const auto& g : res.exceptions) body << to_graph6(g) << "\n";
    if (out_path.empty() || out_path == "-") {
        std::cout << body.str();
    } else {
        std::ofstream out(out_path);
        out << body.str();
    }
    std::cerr << "census: " << res.exceptions.size() << " exceptions among " << res.total
              << " graphs, " << res.unknown << " unknown\n";
    if (!res.complete()) return 3;
    return 0;
}

int cmd_derive_w(int max_order, std::uint64_t budget_nodes, const std::string& out_path) {
    SearchBudget budget;
    budget.node_limit = budget_nodes;  // 0 = unlimited
    WCatalog cat;
    try {
        cat = derive_w(max_order, budget);
    } catch (const std::exception& e) {
        std::cerr << "derive-w error: " << e.what() << "\n";
        return 3;
    }
    if (out_path.empty() || out_path == "-") {
        save_w_catalog(std::cout, cat);
    } else {
        std::ofstream out(out_path);
        save_w_catalog(out, cat);
    }
    std::cerr << "derive-w: " << cat.members.size() << " members up to order " << cat.max_order
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge-disjoint graph packing toolkit"};
    app.require_subcommand(1);

    // pack
    std::string pack_input, pack_mode = "auto", pack_fmt = "auto", pack_out;
    int pack_k = 4;
    std::uint64_t pack_budget = 0;
    double pack_seconds = 0;
    auto* pack = app.add_subcommand("pack", "find an edge-disjoint k-placement");
    pack->add_option("input", pack_input, "graph file (edge list or graph6)")->required();
    pack->add_option("--k", pack_k, "number of copies")->check(CLI::PositiveNumber);
    pack->add_option("--mode", pack_mode, "auto|theorem|oracle")
        ->check(CLI::IsMember({"auto", "theorem", "oracle"}));
    pack->add_option("--format", pack_fmt, "auto|edges|g6")
        ->check(CLI::IsMember({"auto", "edges", "g6"}));
    pack->add_option("--budget", pack_budget, "search node budget");
    pack->add_option("--budget-seconds", pack_seconds, "search time budget");
    pack->add_option("-o,--output", pack_out, "placement output file (default stdout)");

    // verify
    std::string ver_graph, ver_placement, ver_fmt = "auto";
    auto* ver = app.add_subcommand("verify", "check a placement certificate");
    ver->add_option("graph", ver_graph, "graph file")->required();
    ver->add_option("placement", ver_placement, "placement file")->required();
    ver->add_option("--format", ver_fmt, "auto|edges|g6");

    // census
    int cen_n = 0, cen_q = 0, cen_k = 2, cen_girth = 0, cen_jobs = 1;
    bool cen_exact = false, cen_connected = false;
    std::uint64_t cen_budget = 0;
    std::string cen_out;
    auto* cen = app.add_subcommand("census", "exception census over a small family");
    cen->add_option("--n", cen_n, "order")->required();
    cen->add_option("--q", cen_q, "edge bound")->required();
    cen->add_option("--k", cen_k, "copies");
    cen->add_option("--girth-min", cen_girth, "minimum girth filter");
    cen->add_flag("--exact", cen_exact, "exactly q edges instead of at most q");
    cen->add_flag("--connected", cen_connected, "connected graphs only");
    cen->add_option("--budget", cen_budget, "per-graph node budget");
    cen->add_option("--jobs", cen_jobs, "parallel workers");
    cen->add_option("-o,--output", cen_out, "output file (default stdout)");

    // derive-w
    int dw_order = 11;
    std::uint64_t dw_budget = 0;
    std::string dw_out;
    auto* dw = app.add_subcommand("derive-w", "derive the exception-tree catalog");
    dw->add_option("--max-order", dw_order, "largest tree order (complete search)");
    dw->add_option("--budget", dw_budget, "per-graph node budget (0 = unlimited)");
    dw->add_option("-o,--output", dw_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    if (pack->parsed())
        return cmd_pack(pack_input, pack_k, pack_mode, pack_fmt, pack_budget, pack_seconds, pack_out);
    if (ver->parsed()) return cmd_verify(ver_graph, ver_placement, ver_fmt);
    if (cen->parsed())
        return cmd_census(cen_n, cen_q, cen_k, cen_girth, cen_exact, cen_connected, cen_budget,
                          cen_jobs, cen_out);
    if (dw->parsed()) return cmd_derive_w(dw_order, dw_budget, dw_out);
    return 1;
}
