#include "mwbm/mwbm.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "mwbm/bench.hpp"
#include "mwbm/cover.hpp"
#include "mwbm/decomposition.hpp"
#include "mwbm/error.hpp"
#include "mwbm/graph.hpp"
#include "mwbm/graph_io.hpp"
#include "mwbm/oracle.hpp"

struct mwbm_graph {
    mwbm::BipartiteGraph graph;
};

namespace {

thread_local std::string last_error;

mwbm_status to_status(mwbm::Errc code) {
    using mwbm::Errc;
    switch (code) {
        case Errc::InvalidArgument: return MWBM_ERR_INVALID_ARGUMENT;
        case Errc::DuplicateEdge: return MWBM_ERR_DUPLICATE_EDGE;
        case Errc::ZeroOrNegativeWeight: return MWBM_ERR_NONPOSITIVE_WEIGHT;
        case Errc::IndexOutOfRange: return MWBM_ERR_INDEX_OUT_OF_RANGE;
        case Errc::EmptyGraph: return MWBM_ERR_EMPTY_GRAPH;
        case Errc::Overflow: return MWBM_ERR_OVERFLOW;
        case Errc::ParseError: return MWBM_ERR_PARSE;
        case Errc::IoError: return MWBM_ERR_IO;
        case Errc::HOutOfRange: return MWBM_ERR_H_OUT_OF_RANGE;
        case Errc::NotMaximumMatching: return MWBM_ERR_NOT_MAXIMUM_MATCHING;
        case Errc::InfeasibleCover: return MWBM_ERR_INFEASIBLE_COVER;
        case Errc::ExtractionStuck: return MWBM_ERR_EXTRACTION_STUCK;
        case Errc::TooLarge: return MWBM_ERR_TOO_LARGE;
        case Errc::Internal: return MWBM_ERR_INTERNAL;
    }
    return MWBM_ERR_INTERNAL;
}

template <typename F>
mwbm_status guarded(F&& body) {
    last_error.clear();
    try {
        body();
        return MWBM_OK;
    } catch (const mwbm::Error& e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return MWBM_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return MWBM_ERR_INTERNAL;
    }
}

void require(bool condition, const char* what) {
    if (!condition) throw mwbm::Error(mwbm::Errc::InvalidArgument, what);
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

mwbm::Cover read_cover(const mwbm::BipartiteGraph& g, const uint64_t* left, const uint64_t* right) {
    mwbm::Cover c;
    c.left.assign(left, left + g.n_left());
    c.right.assign(right, right + g.n_right());
    return c;
}

mwbm::SolveMode to_mode(mwbm_mode mode) {
    switch (mode) {
        case MWBM_MODE_MODIFIED: return mwbm::SolveMode::Modified;
        case MWBM_MODE_BASELINE: return mwbm::SolveMode::Baseline;
    }
    throw mwbm::Error(mwbm::Errc::InvalidArgument, "unknown mode");
}

mwbm::GenMethod to_method(mwbm_generator gen) {
    switch (gen) {
        case MWBM_GEN_SPLIT: return mwbm::GenMethod::RandomSplit;
        case MWBM_GEN_UNIT: return mwbm::GenMethod::UnitIncrement;
    }
    throw mwbm::Error(mwbm::Errc::InvalidArgument, "unknown generator");
}

mwbm::RowFormat to_format(mwbm_format f) {
    switch (f) {
        case MWBM_FORMAT_CSV: return mwbm::RowFormat::Csv;
        case MWBM_FORMAT_JSON: return mwbm::RowFormat::Json;
        case MWBM_FORMAT_TSV: return mwbm::RowFormat::Tsv;
    }
    throw mwbm::Error(mwbm::Errc::InvalidArgument, "unknown format");
}

}  // namespace

extern "C" {

const char* mwbm_version(void) { return "1.0.0"; }

const char* mwbm_status_string(mwbm_status status) {
    switch (status) {
        case MWBM_OK: return "ok";
        case MWBM_ERR_INVALID_ARGUMENT: return "invalid argument";
        case MWBM_ERR_DUPLICATE_EDGE: return "duplicate edge";
        case MWBM_ERR_NONPOSITIVE_WEIGHT: return "zero or negative weight";
        case MWBM_ERR_INDEX_OUT_OF_RANGE: return "index out of range";
        case MWBM_ERR_EMPTY_GRAPH: return "empty graph";
        case MWBM_ERR_OVERFLOW: return "integer overflow";
        case MWBM_ERR_PARSE: return "parse error";
        case MWBM_ERR_IO: return "i/o error";
        case MWBM_ERR_H_OUT_OF_RANGE: return "h out of range";
        case MWBM_ERR_NOT_MAXIMUM_MATCHING: return "not a maximum matching";
        case MWBM_ERR_INFEASIBLE_COVER: return "infeasible cover";
        case MWBM_ERR_EXTRACTION_STUCK: return "matching extraction stuck";
        case MWBM_ERR_TOO_LARGE: return "instance too large";
        case MWBM_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* mwbm_last_error(void) { return last_error.c_str(); }

void mwbm_string_free(char* s) { std::free(s); }

mwbm_status mwbm_graph_create(uint32_t n_left, uint32_t n_right, const mwbm_edge* edges, size_t edge_count,
                              mwbm_graph** out) {
    return guarded([&] {
        require(out != nullptr, "out is null");
        require(edges != nullptr || edge_count == 0, "edges is null");
        std::vector<mwbm::Edge> list(edge_count);
        for (size_t i = 0; i < edge_count; ++i) list[i] = {edges[i].left, edges[i].right, edges[i].weight};
        *out = new mwbm_graph{mwbm::BipartiteGraph::build(n_left, n_right, list)};
    });
}

mwbm_status mwbm_graph_parse(const char* text, mwbm_graph** out) {
    return guarded([&] {
        require(text != nullptr && out != nullptr, "null argument");
        *out = new mwbm_graph{mwbm::parse_graph(std::string(text))};
    });
}

mwbm_status mwbm_graph_load(const char* path, mwbm_graph** out) {
    return guarded([&] {
        require(path != nullptr && out != nullptr, "null argument");
        *out = new mwbm_graph{mwbm::load_graph(path)};
    });
}

mwbm_status mwbm_graph_save(const mwbm_graph* g, const char* path) {
    return guarded([&] {
        require(g != nullptr && path != nullptr, "null argument");
        mwbm::save_graph(g->graph, path);
    });
}

mwbm_status mwbm_graph_serialize(const mwbm_graph* g, char** out) {
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        *out = copy_string(mwbm::serialize_graph(g->graph));
    });
}

void mwbm_graph_destroy(mwbm_graph* g) { delete g; }

mwbm_status mwbm_graph_info_get(const mwbm_graph* g, mwbm_graph_info* out) {
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        const auto& x = g->graph;
        *out = {x.n_left(), x.n_right(), x.edge_count(), x.total_weight(), x.max_weight(), x.distinct_weight_count()};
    });
}

mwbm_status mwbm_graph_edges(const mwbm_graph* g, mwbm_edge* out, size_t capacity, size_t* count) {
    return guarded([&] {
        require(g != nullptr && count != nullptr, "null argument");
        require(out != nullptr || capacity == 0, "out is null");
        const auto& edges = g->graph.edges();
        for (size_t i = 0; i < edges.size() && i < capacity; ++i) {
            out[i] = {edges[i].left, edges[i].right, edges[i].weight};
        }
        *count = edges.size();
    });
}

mwbm_status mwbm_graph_top_two(const mwbm_graph* g, uint64_t* h1, uint64_t* h2) {
    return guarded([&] {
        require(g != nullptr && h1 != nullptr && h2 != nullptr, "null argument");
        auto [a, b] = g->graph.top_two_weights();
        *h1 = a;
        *h2 = b;
    });
}

mwbm_status mwbm_graph_gcd(const mwbm_graph* g, uint64_t* out) {
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        *out = g->graph.weight_gcd();
    });
}

mwbm_status mwbm_graph_scale(const mwbm_graph* g, uint64_t alpha, mwbm_graph** out) {
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        *out = new mwbm_graph{g->graph.scale_weights(alpha)};
    });
}

mwbm_status mwbm_solve(const mwbm_graph* g, mwbm_mode mode, mwbm_solve_summary* out, char** trace_json) {
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        auto r = mwbm::solve_weight(g->graph, to_mode(mode));
        std::string json = trace_json ? mwbm::trace_to_json(r.trace) : std::string();
        *out = {r.weight, r.trace.iterations(), r.trace.w_prime};
        if (trace_json) *trace_json = copy_string(json);
    });
}

mwbm_status mwbm_min_cover(const mwbm_graph* g, uint64_t* left, uint64_t* right, uint64_t* weight) {
    return guarded([&] {
        require(g != nullptr && left != nullptr && right != nullptr && weight != nullptr, "null argument");
        mwbm::Cover c = mwbm::min_weight_cover(g->graph);
        std::copy(c.left.begin(), c.left.end(), left);
        std::copy(c.right.begin(), c.right.end(), right);
        *weight = c.weight();
    });
}

mwbm_status mwbm_cover_feasible(const mwbm_graph* g, const uint64_t* left, const uint64_t* right, int* feasible) {
    return guarded([&] {
        require(g != nullptr && left != nullptr && right != nullptr && feasible != nullptr, "null argument");
        *feasible = mwbm::cover_feasible(g->graph, read_cover(g->graph, left, right)) ? 1 : 0;
    });
}

mwbm_status mwbm_extract_matching(const mwbm_graph* g, const uint64_t* left, const uint64_t* right, mwbm_edge* out,
                                  size_t* count, uint64_t* weight) {
    return guarded([&] {
        require(g != nullptr && left != nullptr && right != nullptr && out != nullptr && count != nullptr &&
                    weight != nullptr,
                "null argument");
        auto m = mwbm::extract_matching(g->graph, read_cover(g->graph, left, right));
        for (size_t i = 0; i < m.edges.size(); ++i) out[i] = {m.edges[i].left, m.edges[i].right, m.edges[i].weight};
        *count = m.edges.size();
        *weight = m.weight;
    });
}

mwbm_status mwbm_oracle(const mwbm_graph* g, uint64_t* weight) {
    return guarded([&] {
        require(g != nullptr && weight != nullptr, "null argument");
        *weight = mwbm::oracle_mwm(g->graph).weight;
    });
}

mwbm_status mwbm_generate(uint32_t n, uint64_t total_weight, uint64_t seed, mwbm_generator generator,
                          mwbm_graph** out) {
    return guarded([&] {
        require(out != nullptr, "out is null");
        *out = new mwbm_graph{mwbm::gen_random_graph({n, total_weight, seed, to_method(generator)})};
    });
}

mwbm_status mwbm_bench(const mwbm_bench_config* config, char** table, char** metadata) {
    return guarded([&] {
        require(config != nullptr && table != nullptr, "null argument");
        require(config->ns != nullptr && config->n_count > 0, "no partition sizes");
        require(config->weights != nullptr && config->weight_count > 0, "no weights");
        require(config->run_modified || config->run_baseline, "no mode selected");
        auto method = to_method(config->generator);
        auto format = to_format(config->format);

        std::vector<mwbm::InstanceSpec> specs;
        for (size_t i = 0; i < config->n_count; ++i) {
            for (size_t k = 0; k < config->weight_count; ++k) {
                const uint32_t n = config->ns[i];
                const uint64_t w = config->weights[k];
                specs.push_back({n, w, mwbm::cell_seed(config->seed, n, w), method});
            }
        }
        std::vector<mwbm::SolveMode> modes;
        if (config->run_modified) modes.push_back(mwbm::SolveMode::Modified);
        if (config->run_baseline) modes.push_back(mwbm::SolveMode::Baseline);

        mwbm::ExperimentOptions opts;
        opts.repeats = config->repeats;
        opts.average = config->average != 0;
        opts.jobs = config->jobs;
        auto rows = mwbm::run_experiment(specs, modes, opts);

        std::string text = mwbm::emit(rows, format);
        std::string meta = metadata ? mwbm::bench_metadata(method) : std::string();
        *table = copy_string(text);
        if (metadata) *metadata = copy_string(meta);
    });
}

}  // extern "C"
