// Regenerates the stored fixture tables by exhaustive search and the W
// catalog by complete refutation. Writes into the given data directory
// (default: ./data).

#include <filesystem>
#include <fstream>
#include <iostream>

#include "gpack/constructions.hpp"
#include "gpack/graph.hpp"
#include "gpack/oracle.hpp"
#include "gpack/placement.hpp"
#include "gpack/wcatalog.hpp"

using namespace gpack;

namespace {

void write_file(const std::filesystem::path& path, const Placement& p) {
    std::ofstream out(path);
    write_placement(out, p);
    std::cerr << "wrote " << path << "\n";
}

Placement derive_dispersed(const Graph& g, const char* what) {
    SearchBudget budget;
    budget.node_limit = 0;  // unlimited; these are small
    SearchOptions opts;
    opts.require_dispersed = true;
    SearchResult r = brute_force_pack(g, 4, budget, opts);
    if (r.verdict != SearchVerdict::Found) {
        std::cerr << "no dispersed 4-placement found for " << what << "\n";
        std::exit(1);
    }
    auto rep = verify(g, *r.placement);
    if (!rep.ok || !dispersed(*r.placement)) {
        std::cerr << "fixture verification failed for " << what << "\n";
        std::exit(1);
    }
    return *r.placement;
}

}  // namespace

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "data";
    std::filesystem::create_directories(dir / "fixtures" / "v1");

    // small path unions P_a (+) P_b (+) K_1, 3 <= a+b <= 6
    for (int a = 1; a <= 3; ++a) {
        for (int b = a; a + b <= 6; ++b) {
            if (a + b < 3) continue;
            Graph g = small_union_graph(a, b);
            Placement p = derive_dispersed(g, "paths");
            write_file(dir / "fixtures" / "v1" /
                           ("paths_" + std::to_string(a) + "_" + std::to_string(b) + "_k1.txt"),
                       p);
        }
    }

    // spiders Q(2,2,3) and Q(2,2,2,2)
    write_file(dir / "fixtures" / "v1" / "spider_q223.txt",
               derive_dispersed(spider_graph({2, 2, 3}), "Q(2,2,3)"));
    write_file(dir / "fixtures" / "v1" / "spider_q2222.txt",
               derive_dispersed(spider_graph({2, 2, 2, 2}), "Q(2,2,2,2)"));

    // W catalog
    int max_order = argc > 2 ? std::atoi(argv[2]) : 11;
    SearchBudget budget;
    budget.node_limit = 0;
    WCatalog cat = derive_w(max_order, budget);
    std::ofstream out(dir / "w_catalog.g6");
    save_w_catalog(out, cat);
    std::cerr << "wrote w_catalog.g6 with " << cat.members.size() << " members (max_order="
              << cat.max_order << ")\n";
    return 0;
}
