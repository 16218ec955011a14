#include "doctest.h"
#include "mwbm/decomposition.hpp"
#include "mwbm/error.hpp"
#include "mwbm/oracle.hpp"
#include "support/brute.hpp"

using namespace mwbm;

namespace {

BipartiteGraph example_944() { return BipartiteGraph::build(2, 2, std::vector<Edge>{{0, 0, 9}, {0, 1, 4}, {1, 0, 4}}); }

std::vector<std::pair<Index, Index>> filter_edges(const BipartiteGraph& g, Weight lo, Weight hi) {
    std::vector<std::pair<Index, Index>> out;
    for (const Edge& e : g.edges())
        if (e.weight >= lo && e.weight <= hi) out.push_back({e.left, e.right});
    return out;
}

}  // namespace

TEST_CASE("extract_gh selects the weight window") {
    auto g = example_944();
    // h=5: window [5, 9]
    CHECK(brute::unit_edges(extract_gh(g, 5)) == filter_edges(g, 5, 9));
    CHECK(extract_gh(g, 5).edge_count() == 1);
    // h=6: window [4, 9]
    CHECK(brute::unit_edges(extract_gh(g, 6)) == filter_edges(g, 4, 9));
    CHECK(extract_gh(g, 6).edge_count() == 3);
    CHECK(extract_gh(g, 9).edge_count() == g.edge_count());

    CHECK_THROWS_AS(extract_gh(g, 0), Error);
    CHECK_THROWS_AS(extract_gh(g, 10), Error);
    CHECK_THROWS_AS(extract_gh(BipartiteGraph::build(1, 1, {}), 1), Error);
}

TEST_CASE("cover_from_vc") {
    VertexCoverSet vc{{true, false}, {false, false}};
    auto c = cover_from_vc(5, vc);
    CHECK(c.left == std::vector<Weight>{5, 0});
    CHECK(c.right == std::vector<Weight>{0, 0});
    CHECK(c.weight() == 5);

    auto unit = cover_from_vc(1, VertexCoverSet{{false}, {true, true}});
    CHECK(unit.weight() == 2);

    CHECK(cover_from_vc(4, VertexCoverSet{{false, false}, {false, false}}).weight() == 0);
}

TEST_CASE("apply_delta") {
    Cover ca(2, 2);
    ca.left[0] = 5;
    auto d = apply_delta(example_944(), ca);
    CHECK(d.graph.edges() == std::vector<Edge>{{0, 0, 4}, {1, 0, 4}});
    CHECK(d.reduced_edges == 2);

    auto same = apply_delta(example_944(), Cover(2, 2));
    CHECK(same.graph == example_944());
    CHECK(same.reduced_edges == 0);

    Cover cx(2, 2);
    cx.right[0] = 4;
    auto gone = apply_delta(d.graph, cx);
    CHECK(gone.graph.empty());
    CHECK(gone.reduced_edges == 2);
    CHECK(gone.graph.distinct_weight_count() == 0);
}

TEST_CASE("solve_weight on the worked example") {
    auto g = example_944();
    CHECK(brute::max_weight_matching(g) == 9);

    auto r = solve_weight(g, SolveMode::Modified);
    CHECK(r.weight == 9);
    REQUIRE(r.trace.iterations() == 2);
    CHECK(r.trace.records[0].h == 5);
    CHECK(r.trace.records[1].h == 4);
    CHECK(r.trace.records[0].contribution == 5);
    CHECK(r.trace.records[1].contribution == 4);
    CHECK(r.trace.w_prime == 4);

    CHECK(solve_weight(g, SolveMode::Baseline).weight == 9);
}

TEST_CASE("uniform weights finish in one step") {
    auto g = BipartiteGraph::build(2, 2, std::vector<Edge>{{0, 0, 7}, {0, 1, 7}, {1, 0, 7}, {1, 1, 7}});
    auto r = solve_weight(g, SolveMode::Modified);
    CHECK(r.trace.iterations() == 1);
    CHECK(r.trace.records[0].h == 7);
    CHECK(r.weight == 14);
}

TEST_CASE("two buckets 500 and 5: two steps against five hundred") {
    auto g = BipartiteGraph::build(2, 2, std::vector<Edge>{{0, 0, 500}, {1, 1, 5}});
    auto mod = solve_weight(g, SolveMode::Modified);
    CHECK(mod.trace.iterations() == 2);
    CHECK(mod.trace.records[0].h == 495);
    auto base = solve_weight(g, SolveMode::Baseline);
    CHECK(base.trace.iterations() == 500);
    CHECK(mod.weight == 505);
    CHECK(base.weight == 505);
}

TEST_CASE("empty graph solves to zero with an empty trace") {
    auto r = solve_weight(BipartiteGraph::build(3, 1, {}), SolveMode::Baseline);
    CHECK(r.weight == 0);
    CHECK(r.trace.iterations() == 0);
    CHECK(r.trace.w_prime == 0);
}

TEST_CASE("check_decomposition_identity") {
    auto g = example_944();
    CHECK(check_decomposition_identity(g, 5));
    CHECK(check_decomposition_identity(g, 1));
    CHECK_THROWS_AS(check_decomposition_identity(g, 6), Error);
    CHECK_THROWS_AS(check_decomposition_identity(g, 0), Error);

    // Outside the admissible range G_6 carries weights 6 and 1, so its
    // weighted optimum is not h times its cardinality.
    auto g6 = extract_gh_weighted(g, 6);
    CHECK(g6.edges() == std::vector<Edge>{{0, 0, 6}, {0, 1, 1}, {1, 0, 1}});
    auto mm6 = max_cardinality_matching(extract_gh(g, 6));
    CHECK(oracle_mwm(g6).weight == 6);
    CHECK(6 * mm6.cardinality == 12);
}

TEST_CASE("trace JSON round trip") {
    auto r = solve_weight(example_944(), SolveMode::Modified);
    auto text = trace_to_json(r.trace);
    CHECK(text.find("\"w_prime\": 4") != std::string::npos);
    CHECK(trace_from_json(text) == r.trace);
    CHECK_THROWS_AS(trace_from_json("{"), Error);
    CHECK_THROWS_AS(parse_mode("fast"), Error);
}

TEST_CASE("property: step-by-step loop matches the solver and makes progress") {
    brute::TestRng rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = brute::random_graph(rng, static_cast<Index>(rng.range(1, 6)), static_cast<Index>(rng.range(1, 6)),
                                     70, rng.range(1, 40));
        for (SolveMode mode : {SolveMode::Modified, SolveMode::Baseline}) {
            auto expected = solve_weight(g, mode).trace;
            BipartiteGraph work = g;
            std::size_t i = 0;
            Weight total = 0;
            while (!work.empty()) {
                REQUIRE(i < expected.records.size());
                auto [h1, h2] = work.top_two_weights();
                Weight h = mode == SolveMode::Modified ? h1 - h2 : 1;
                auto gh = extract_gh(work, h);
                auto mm = max_cardinality_matching(gh);
                auto d = apply_delta(work, cover_from_vc(h, koenig_vertex_cover(gh, mm)));
                CHECK(d.graph.max_weight() < work.max_weight());
                const auto& rec = expected.records[i];
                CHECK(rec.h == h);
                CHECK(rec.matched == mm.cardinality);
                CHECK(rec.reduced_edges == d.reduced_edges);
                total += h * mm.cardinality;
                work = d.graph;
                ++i;
            }
            CHECK(i == expected.iterations());
            CHECK(total == expected.weight);
        }
    }
}

TEST_CASE("property: modes agree with the brute-force matching weight; trace invariants") {
    brute::TestRng rng(29);
    for (int trial = 0; trial < 600; ++trial) {
        auto g = brute::random_graph(rng, static_cast<Index>(rng.range(1, 6)), static_cast<Index>(rng.range(1, 6)),
                                     static_cast<unsigned>(rng.range(10, 100)), rng.range(1, 60));
        Weight truth = brute::max_weight_matching(g);
        auto mod = solve_weight(g, SolveMode::Modified);
        auto base = solve_weight(g, SolveMode::Baseline);
        CHECK(mod.weight == truth);
        CHECK(base.weight == truth);

        for (const auto* r : {&mod, &base}) {
            const auto& t = r->trace;
            CHECK(t.iterations() <= g.max_weight());
            Weight removed = 0;
            for (const auto& rec : t.records) {
                CHECK(rec.h >= 1);
                CHECK(rec.contribution == rec.h * rec.matched);
                removed += rec.reduced_weight;
            }
            CHECK(removed == g.total_weight());
            CHECK(t.w_prime >= g.edge_count());
        }
        for (const auto& rec : base.trace.records) CHECK(rec.h == 1);
        if (!g.empty()) CHECK(mod.trace.w_prime <= g.total_weight() / g.weight_gcd());
    }
}

TEST_CASE("property: scaling leaves the modified trace shape unchanged") {
    brute::TestRng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = brute::random_graph(rng, static_cast<Index>(rng.range(1, 7)), static_cast<Index>(rng.range(1, 7)), 60,
                                     rng.range(1, 100));
        Weight alpha = rng.range(1, 50);
        auto a = solve_weight(g, SolveMode::Modified).trace;
        auto b = solve_weight(g.scale_weights(alpha), SolveMode::Modified).trace;
        REQUIRE(a.iterations() == b.iterations());
        for (std::size_t i = 0; i < a.iterations(); ++i) {
            CHECK(b.records[i].h == alpha * a.records[i].h);
            CHECK(b.records[i].reduced_edges == a.records[i].reduced_edges);
            CHECK(b.records[i].matched == a.records[i].matched);
        }
        CHECK(b.weight == alpha * a.weight);
    }
}

TEST_CASE("property: decomposition identity over the admissible range") {
    brute::TestRng rng(37);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = brute::random_graph(rng, static_cast<Index>(rng.range(1, 6)), static_cast<Index>(rng.range(1, 6)), 60,
                                     rng.range(1, 30));
        if (g.empty()) continue;
        auto [h1, h2] = g.top_two_weights();
        for (Weight h = 1; h <= h1 - h2; ++h) CHECK(check_decomposition_identity(g, h));
        CHECK_THROWS_AS(check_decomposition_identity(g, h1 - h2 + 1), Error);
    }
}
