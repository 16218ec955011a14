#include "doctest.h"
#include "mwbm/error.hpp"
#include "mwbm/oracle.hpp"
#include "support/brute.hpp"

using namespace mwbm;

TEST_CASE("oracle_mwm examples") {
    auto g = BipartiteGraph::build(2, 2, std::vector<Edge>{{0, 0, 9}, {0, 1, 4}, {1, 0, 4}});
    auto r = oracle_mwm(g);
    CHECK(r.weight == 9);
    CHECK(r.matching.pair_left[0] == 0);
    CHECK(r.matching.cardinality == 1);

    CHECK(oracle_mwm(BipartiteGraph::build(3, 2, {})).weight == 0);

    auto full = BipartiteGraph::build(2, 2, std::vector<Edge>{{0, 0, 7}, {0, 1, 7}, {1, 0, 7}, {1, 1, 7}});
    CHECK(oracle_mwm(full).weight == 14);
}

TEST_CASE("oracle_enumerate examples") {
    CHECK(oracle_enumerate(BipartiteGraph::build(1, 1, std::vector<Edge>{{0, 0, 7}})) == 7);
    CHECK(oracle_enumerate(BipartiteGraph::build(2, 2, std::vector<Edge>{{0, 0, 3}, {1, 1, 5}})) == 8);
    CHECK(oracle_enumerate(BipartiteGraph::build(2, 2, std::vector<Edge>{{0, 0, 3}, {0, 1, 5}})) == 5);
}

TEST_CASE("size guards") {
    std::vector<Edge> edges;
    for (Index i = 0; i < 16; ++i) edges.push_back({i, i, 1});
    auto big = BipartiteGraph::build(16, 16, edges);
    CHECK_THROWS_AS(oracle_mwm(big), Error);

    std::vector<Edge> many;
    for (Index i = 0; i < 21; ++i) many.push_back({0, i, 1});
    auto wide = BipartiteGraph::build(1, 21, many);
    CHECK_THROWS_AS(oracle_enumerate(wide), Error);
    CHECK(oracle_mwm(wide).weight == 1);  // small side is 1
}

TEST_CASE("property: DP oracle, enumeration, and recursion agree; witness is valid") {
    brute::TestRng rng(3);
    for (int trial = 0; trial < 800; ++trial) {
        Index n1 = static_cast<Index>(rng.range(1, 6));
        Index n2 = static_cast<Index>(rng.range(1, 6));
        auto g = brute::random_graph(rng, n1, n2, static_cast<unsigned>(rng.range(0, 100)), rng.range(1, 100));
        if (g.edge_count() > kEnumerateMaxEdges) continue;

        auto r = oracle_mwm(g);
        CHECK(r.weight == oracle_enumerate(g));
        CHECK(r.weight == brute::max_weight_matching(g));

        REQUIRE(r.matching.consistent());
        Weight w = 0;
        for (Index u = 0; u < n1; ++u) {
            Index v = r.matching.pair_left[u];
            if (v == kUnmatched) continue;
            CHECK(g.weight(u, v) > 0);
            w += g.weight(u, v);
        }
        CHECK(w == r.weight);
    }
}

TEST_CASE("oracle handles a lopsided instance with the right side smaller") {
    brute::TestRng rng(8);
    auto g = brute::random_graph(rng, 30, 4, 40, 50);
    auto transposed = [&] {
        std::vector<Edge> t;
        for (const Edge& e : g.edges()) t.push_back({e.right, e.left, e.weight});
        return BipartiteGraph::build(4, 30, t);
    }();
    CHECK(oracle_mwm(g).weight == oracle_mwm(transposed).weight);
}
