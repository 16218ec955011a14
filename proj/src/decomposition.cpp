#include "mwbm/decomposition.hpp"

#include <json.hpp>

#include "mwbm/error.hpp"

namespace mwbm {

const char* mode_name(SolveMode mode) noexcept {
    return mode == SolveMode::Modified ? "modified" : "baseline";
}

SolveMode parse_mode(const std::string& name) {
    if (name == "modified") return SolveMode::Modified;
    if (name == "baseline") return SolveMode::Baseline;
    throw Error(Errc::InvalidArgument, "unknown mode '" + name + "'");
}

UnitGraph extract_gh(const BipartiteGraph& g, Weight h) {
    Weight n = g.max_weight();
    if (h < 1 || h > n) {
        throw Error(Errc::HOutOfRange, "h=" + std::to_string(h) + " outside [1, " + std::to_string(n) + "]");
    }
    Weight floor = n - h + 1;
    UnitGraph out(g.n_left(), g.n_right());
    const auto& buckets = g.buckets();
    for (auto it = buckets.rbegin(); it != buckets.rend() && it->first >= floor; ++it) {
        for (const EdgeKey& k : it->second) out.adjacency[k.left].push_back(k.right);
    }
    out.normalize();
    return out;
}

BipartiteGraph extract_gh_weighted(const BipartiteGraph& g, Weight h) {
    Weight n = g.max_weight();
    if (h < 1 || h > n) {
        throw Error(Errc::HOutOfRange, "h=" + std::to_string(h) + " outside [1, " + std::to_string(n) + "]");
    }
    Weight shift = n - h;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (e.weight > shift) edges.push_back({e.left, e.right, e.weight - shift});
    }
    return BipartiteGraph::build(g.n_left(), g.n_right(), edges);
}

Cover cover_from_vc(Weight h, const VertexCoverSet& vc) {
    Cover c(static_cast<Index>(vc.left.size()), static_cast<Index>(vc.right.size()));
    for (Index i = 0; i < vc.left.size(); ++i)
        if (vc.left[i]) c.left[i] = h;
    for (Index i = 0; i < vc.right.size(); ++i)
        if (vc.right[i]) c.right[i] = h;
    return c;
}

DeltaResult apply_delta(BipartiteGraph g, const Cover& ch) {
    auto r = g.subtract_cover(ch);
    return {std::move(g), r.changed, r.removed};
}

namespace {

SolveResult decompose(const BipartiteGraph& input, SolveMode mode, Cover* accumulate) {
    SolveResult result;
    result.trace.mode = mode;
    BipartiteGraph work = input;

    while (!work.empty()) {
        IterationRecord rec;
        rec.index = result.trace.records.size() + 1;
        rec.distinct_weights = work.distinct_weight_count();
        if (mode == SolveMode::Modified) {
            auto [h1, h2] = work.top_two_weights();
            rec.h = h1 - h2;
        } else {
            rec.h = 1;
        }

        UnitGraph gh = extract_gh(work, rec.h);
        Matching mm = max_cardinality_matching(gh);
        VertexCoverSet vc = koenig_vertex_cover(gh, mm);
        Cover ch = cover_from_vc(rec.h, vc);

        rec.matched = mm.cardinality;
        rec.contribution = checked_mul(rec.h, mm.cardinality);

        auto reduction = work.subtract_cover(ch);
        rec.reduced_edges = reduction.changed;
        rec.reduced_weight = reduction.removed;

        if (accumulate) {
            for (Index i = 0; i < ch.left.size(); ++i) accumulate->left[i] += ch.left[i];
            for (Index i = 0; i < ch.right.size(); ++i) accumulate->right[i] += ch.right[i];
        }

        auto& t = result.trace;
        t.weight = checked_add(t.weight, rec.contribution);
        t.w_prime += rec.reduced_edges;
        t.sum_l_times_h = checked_add(t.sum_l_times_h, checked_mul(rec.reduced_edges, rec.h));
        t.records.push_back(rec);
    }

    result.weight = result.trace.weight;
    return result;
}

}  // namespace

SolveResult solve_weight(const BipartiteGraph& g, SolveMode mode) {
    return decompose(g, mode, nullptr);
}

SolveResult solve_weight(const BipartiteGraph& g, SolveMode mode, Cover& cover) {
    if (cover.left.size() != g.n_left() || cover.right.size() != g.n_right()) {
        throw Error(Errc::InvalidArgument, "cover dimensions do not match graph");
    }
    return decompose(g, mode, &cover);
}

bool check_decomposition_identity(const BipartiteGraph& g, Weight h) {
    if (g.empty()) throw Error(Errc::HOutOfRange, "no admissible h for an empty graph");
    auto [h1, h2] = g.top_two_weights();
    if (h < 1 || h > h1 - h2) {
        throw Error(Errc::HOutOfRange,
                    "h=" + std::to_string(h) + " outside [1, H1-H2=" + std::to_string(h1 - h2) + "]");
    }
    UnitGraph gh = extract_gh(g, h);
    Matching mm = max_cardinality_matching(gh);
    Cover ch = cover_from_vc(h, koenig_vertex_cover(gh, mm));
    DeltaResult delta = apply_delta(g, ch);

    Weight lhs = checked_add(checked_mul(h, mm.cardinality), solve_weight(delta.graph, SolveMode::Modified).weight);
    return lhs == solve_weight(g, SolveMode::Modified).weight;
}

std::string trace_to_json(const DecompositionTrace& trace) {
    nlohmann::ordered_json j;
    j["mode"] = mode_name(trace.mode);
    j["weight"] = trace.weight;
    j["p"] = trace.iterations();
    j["w_prime"] = trace.w_prime;
    j["sum_l_times_h"] = trace.sum_l_times_h;
    auto& its = j["iterations"] = nlohmann::ordered_json::array();
    for (const auto& r : trace.records) {
        its.push_back({{"i", r.index},
                       {"h", r.h},
                       {"matched", r.matched},
                       {"contribution", r.contribution},
                       {"l", r.reduced_edges},
                       {"distinct_weights", r.distinct_weights},
                       {"reduced_weight", r.reduced_weight}});
    }
    return j.dump(2);
}

DecompositionTrace trace_from_json(const std::string& text) {
    DecompositionTrace t;
    try {
        auto j = nlohmann::json::parse(text);
        t.mode = parse_mode(j.at("mode").get<std::string>());
        t.weight = j.at("weight").get<Weight>();
        t.w_prime = j.at("w_prime").get<Weight>();
        t.sum_l_times_h = j.value("sum_l_times_h", Weight{0});
        for (const auto& it : j.at("iterations")) {
            IterationRecord r;
            r.index = it.at("i").get<std::size_t>();
            r.h = it.at("h").get<Weight>();
            r.matched = it.at("matched").get<std::size_t>();
            r.contribution = it.at("contribution").get<Weight>();
            r.reduced_edges = it.at("l").get<std::size_t>();
            r.distinct_weights = it.value("distinct_weights", std::size_t{0});
            r.reduced_weight = it.value("reduced_weight", Weight{0});
            t.records.push_back(r);
        }
        if (j.at("p").get<std::size_t>() != t.records.size()) {
            throw Error(Errc::ParseError, "trace p does not match iteration count");
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, std::string("malformed trace: ") + e.what());
    }
    return t;
}

}  // namespace mwbm
