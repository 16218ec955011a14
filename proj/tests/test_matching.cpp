#include "doctest.h"
#include "mwbm/error.hpp"
#include "mwbm/matching.hpp"
#include "support/brute.hpp"

using namespace mwbm;

namespace {

// a=0, b=1; x=0, y=1
UnitGraph make(Index n1, Index n2, std::vector<std::pair<Index, Index>> edges) {
    UnitGraph g(n1, n2);
    for (auto [u, v] : edges) g.adjacency[u].push_back(v);
    g.normalize();
    return g;
}

}  // namespace

TEST_CASE("star on one right vertex") {
    auto g = make(2, 1, {{0, 0}, {1, 0}});
    auto m = max_cardinality_matching(g);
    CHECK(m.cardinality == 1);
    CHECK(m.consistent());
}

TEST_CASE("a-x, a-y, b-x matches both left vertices") {
    auto g = make(2, 2, {{0, 0}, {0, 1}, {1, 0}});
    auto m = max_cardinality_matching(g);
    CHECK(m.cardinality == brute::max_matching_size(g));
    CHECK(m.cardinality == 2);
    CHECK(m.pair_left[0] == 1);
    CHECK(m.pair_left[1] == 0);
}

TEST_CASE("empty graph") {
    UnitGraph g(3, 2);
    auto m = max_cardinality_matching(g);
    CHECK(m.cardinality == 0);
    CHECK(koenig_vertex_cover(g, m).size() == 0);
}

TEST_CASE("koenig covers") {
    auto star = make(2, 1, {{0, 0}, {1, 0}});
    Matching m(2, 1);
    m.pair_left[0] = 0;
    m.pair_right[0] = 0;
    m.cardinality = 1;
    auto vc = koenig_vertex_cover(star, m);
    // Only {x} among the 1-subsets covers both edges.
    CHECK(brute::min_vertex_cover_size(star) == 1);
    CHECK(vc.members() == std::vector<VertexId>{{Side::Right, 0}});

    auto tri = make(2, 2, {{0, 0}, {0, 1}, {1, 0}});
    auto vc2 = koenig_vertex_cover(tri, max_cardinality_matching(tri));
    CHECK(vc2.size() == brute::min_vertex_cover_size(tri));
    CHECK(vc2.size() == 2);

    auto disjoint = make(2, 2, {{0, 0}, {1, 1}});
    auto vc3 = koenig_vertex_cover(disjoint, max_cardinality_matching(disjoint));
    CHECK(vc3.members() == std::vector<VertexId>{{Side::Left, 0}, {Side::Left, 1}});
}

TEST_CASE("koenig rejects a non-maximum matching") {
    auto g = make(2, 2, {{0, 0}, {0, 1}, {1, 0}});
    Matching m(2, 2);
    m.pair_left[0] = 0;
    m.pair_right[0] = 0;
    m.cardinality = 1;
    CHECK_THROWS_WITH_AS(koenig_vertex_cover(g, m), doctest::Contains("augmenting"), Error);

    Matching bogus(2, 2);
    bogus.pair_left[1] = 1;
    bogus.pair_right[1] = 1;
    bogus.cardinality = 1;
    CHECK_THROWS_AS(koenig_vertex_cover(g, bogus), Error);
}

TEST_CASE("property: Hopcroft-Karp and Koenig against brute force") {
    brute::TestRng rng(11);
    for (int trial = 0; trial < 1500; ++trial) {
        Index n1 = static_cast<Index>(rng.range(0, 6));
        Index n2 = static_cast<Index>(rng.range(0, 6));
        auto g = brute::random_unit_graph(rng, n1, n2, static_cast<unsigned>(rng.range(0, 100)));
        auto m = max_cardinality_matching(g);

        REQUIRE(m.consistent());
        for (Index u = 0; u < n1; ++u)
            if (m.pair_left[u] != kUnmatched) CHECK(g.has_edge(u, m.pair_left[u]));
        CHECK_FALSE(brute::has_augmenting_path(g, m));
        CHECK(m.cardinality == brute::max_matching_size(g));

        auto vc = koenig_vertex_cover(g, m);
        CHECK(vc.size() == m.cardinality);
        CHECK(vc.size() == brute::min_vertex_cover_size(g));
        for (auto [u, v] : brute::unit_edges(g)) CHECK((vc.left[u] || vc.right[v]));

        // determinism
        auto m2 = max_cardinality_matching(g);
        CHECK(m2 == m);
        CHECK(koenig_vertex_cover(g, m2) == vc);
    }
}

TEST_CASE("long augmenting chains do not recurse") {
    // Path graph u_i - v_i, u_i - v_{i+1}; greedy order forces long augmentations.
    const Index n = 20000;
    UnitGraph g(n, n);
    for (Index i = 0; i < n; ++i) {
        if (i + 1 < n) g.adjacency[i].push_back(i + 1);
        g.adjacency[i].push_back(i);
    }
    g.normalize();
    auto m = max_cardinality_matching(g);
    CHECK(m.cardinality == n);
    CHECK(koenig_vertex_cover(g, m).size() == n);
}
