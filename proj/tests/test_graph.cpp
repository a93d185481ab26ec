#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "knodel/graph.hpp"
#include "knodel/numtheory.hpp"

using namespace knodel;

namespace {

std::set<std::pair<i64, i64>> edge_set(const KnodelGraph& g) {
    auto e = g.edge_list();
    return {e.begin(), e.end()};
}

}  // namespace

TEST_CASE("KG_6 has exactly the six expected edges") {
    auto g = KnodelGraph::build(6);
    CHECK(g.degree() == 2);
    std::set<std::pair<i64, i64>> expected{{0, 1}, {2, 5}, {3, 4}, {0, 3}, {1, 2}, {4, 5}};
    CHECK(edge_set(g) == expected);
}

TEST_CASE("stated neighborhoods") {
    auto g8 = KnodelGraph::build(8);
    CHECK(g8.neighbors(0).to_vector() == std::vector<i64>{1, 3, 7});
    CHECK(g8.neighbors(5).to_vector() == std::vector<i64>{2, 4, 6});
    auto g6 = KnodelGraph::build(6);
    CHECK(g6.neighbors(0).to_vector() == std::vector<i64>{1, 3});
    auto g20 = KnodelGraph::build(20);
    CHECK(g20.neighbors(19).to_vector() == std::vector<i64>{2, 4, 8, 16});
    for (i64 v = 0; v < 20; ++v) CHECK(g20.neighbors(v).size() == 4);
}

TEST_CASE("build rejects bad input") {
    CHECK_THROWS_AS(KnodelGraph::build(7, 2), std::invalid_argument);   // odd
    CHECK_THROWS_AS(KnodelGraph::build(4, 1), std::invalid_argument);   // too small
    CHECK_THROWS_AS(KnodelGraph::build(20, 0), std::invalid_argument);  // degree < 1
    // degrees past floor(log2 n) are rejected whenever neighbor maps collide
    CHECK_THROWS_AS(KnodelGraph::build(6, 3), std::invalid_argument);   // 2^3-1 = 1 mod 6
    CHECK_THROWS_AS(KnodelGraph::build(8, 4), std::invalid_argument);   // 15 = 7 mod 8
    CHECK_THROWS_AS(KnodelGraph::build(12, 4), std::invalid_argument);  // 15 = 3 mod 12
    CHECK_THROWS_AS(KnodelGraph::build(14, 4), std::invalid_argument);  // 15 = 1 mod 14
}

TEST_CASE("the 4-regular variant exists on 10 vertices") {
    // targets 1, 3, 7, 5 are pairwise distinct mod 10 even though 4 > floor(log2 10)
    auto g = KnodelGraph::build(10, 4);
    for (i64 v = 0; v < 10; ++v) CHECK(g.neighbor_list(v).size() == 4);
    CHECK(g.adjacent(0, 5));  // 0 + 5 = 2^3 - 1 mod 10... via target 5 = 15 mod 10
}

TEST_CASE("out-of-range queries throw") {
    auto g = KnodelGraph::build(8);
    CHECK_THROWS_AS(g.neighbors(8), std::out_of_range);
    CHECK_THROWS_AS(g.neighbors(-1), std::out_of_range);
    CHECK_THROWS_AS(g.adjacent(0, 9), std::out_of_range);
    CHECK_THROWS_AS(g.neighbor_via(0, 4), std::out_of_range);
}

TEST_CASE("structural invariants: regular, symmetric, irreflexive, parity-bipartite") {
    for (i64 n = 6; n <= 512; n += 2) {
        auto g = KnodelGraph::build(n);
        const int k = nt::floor_log2(static_cast<nt::u64>(n));
        REQUIRE(g.degree() == k);
        for (i64 v = 0; v < n; ++v) {
            auto nb = g.neighbor_list(v);
            REQUIRE(static_cast<int>(nb.size()) == k);
            for (i64 u : nb) {
                REQUIRE(u != v);
                REQUIRE(g.adjacent(u, v));
                REQUIRE(g.adjacent(v, u));
                REQUIRE((u + v) % 2 == 1);  // every edge crosses the parity split
            }
        }
    }
}

TEST_CASE("neighbor maps are involutions per t") {
    for (i64 n : {6, 8, 20, 64, 1000, 4096}) {
        auto g = KnodelGraph::build(n);
        for (int t = 1; t <= g.degree(); ++t)
            for (i64 v = 0; v < n; ++v) REQUIRE(g.neighbor_via(g.neighbor_via(v, t), t) == v);
    }
}

TEST_CASE("generalized variant: edge sets grow with the degree") {
    for (i64 n : {16, 20, 48, 100}) {
        const int kmax = nt::floor_log2(static_cast<nt::u64>(n));
        for (int k = 1; k < kmax; ++k) {
            auto lo = edge_set(KnodelGraph::build(n, k));
            auto hi = edge_set(KnodelGraph::build(n, k + 1));
            CHECK(std::includes(hi.begin(), hi.end(), lo.begin(), lo.end()));
            CHECK(hi.size() == lo.size() + static_cast<size_t>(n) / 2);
        }
    }
}

TEST_CASE("dense and implicit representations agree") {
    std::mt19937 rng(42);
    for (i64 n : {64, 100, 4096}) {
        auto dense = KnodelGraph::build(n, nt::floor_log2(static_cast<nt::u64>(n)),
                                        /*dense_limit=*/1 << 20);
        auto implicit = KnodelGraph::build(n, nt::floor_log2(static_cast<nt::u64>(n)),
                                           /*dense_limit=*/0);
        CHECK(dense.dense());
        CHECK_FALSE(implicit.dense());
        std::uniform_int_distribution<i64> dist(0, n - 1);
        for (int it = 0; it < 2000; ++it) {
            i64 u = dist(rng), v = dist(rng);
            REQUIRE(dense.adjacent(u, v) == implicit.adjacent(u, v));
        }
        for (int it = 0; it < 50; ++it) {
            i64 v = dist(rng);
            REQUIRE(dense.neighbors(v) == implicit.neighbors(v));
        }
    }
}

TEST_CASE("parity bipartition") {
    auto g = KnodelGraph::build(6);
    auto [evens, odds] = g.parity_bipartition();
    CHECK(evens.to_vector() == std::vector<i64>{0, 2, 4});
    CHECK(odds.to_vector() == std::vector<i64>{1, 3, 5});
    auto g8 = KnodelGraph::build(8);
    auto parts8 = g8.parity_bipartition();
    CHECK(parts8.first.size() == 4);
    CHECK(parts8.second.size() == 4);
    // zero intra-part edges on KG_20
    auto g20 = KnodelGraph::build(20);
    for (auto [u, v] : g20.edge_list()) CHECK(u % 2 != v % 2);
}

TEST_CASE("edge list and dimacs output") {
    auto g = KnodelGraph::build(6);
    std::ostringstream edges, dimacs;
    g.write_edge_list(edges);
    CHECK(edges.str() == "0 1\n0 3\n1 2\n2 5\n3 4\n4 5\n");
    g.write_dimacs(dimacs);
    auto text = dimacs.str();
    CHECK(text.find("p edge 6 6\n") != std::string::npos);
    CHECK(text.find("e 1 2\n") != std::string::npos);  // 1-based
    auto e = g.edge_list();
    CHECK(std::is_sorted(e.begin(), e.end()));
    CHECK(e.size() == 6);
}
