#include "gpack/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <stdexcept>

#ifndef GPACK_DEFAULT_DATA_DIR
#define GPACK_DEFAULT_DATA_DIR "data"
#endif

namespace gpack {
namespace {

Placement load_placement_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("fixture not found: " + path);
    return read_placement(in);
}

}  // namespace

std::string data_dir() {
    if (const char* env = std::getenv("PACKLIB_DATA_DIR"); env && *env) return env;
    return GPACK_DEFAULT_DATA_DIR;
}

Placement load_small_union_fixture(int a, int b) {
    if (a > b) std::swap(a, b);
    if (a < 1 || a + b < 3 || a + b > 6)
        throw std::invalid_argument("small union fixture: need 3 <= a+b <= 6");
    std::string path = data_dir() + "/fixtures/v1/paths_" + std::to_string(a) + "_" +
                       std::to_string(b) + "_k1.txt";
    return load_placement_file(path);
}

Placement load_spider_fixture_q223() {
    return load_placement_file(data_dir() + "/fixtures/v1/spider_q223.txt");
}

Placement load_spider_fixture_q2222() {
    return load_placement_file(data_dir() + "/fixtures/v1/spider_q2222.txt");
}

const WCatalog& default_w_catalog() {
    static WCatalog cat = [] {
        std::string path = data_dir() + "/w_catalog.g6";
        std::ifstream in(path);
        if (!in) throw std::runtime_error("w catalog not found: " + path);
        return load_w_catalog(in);
    }();
    return cat;
}

}  // namespace gpack
