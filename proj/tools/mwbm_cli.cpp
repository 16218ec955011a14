// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mwbm/mwbm.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct Failure {
    int exit_code;
    std::string message;
};

int exit_code_for(mwbm_status s) {
    switch (s) {
        case MWBM_OK: return kExitOk;
        case MWBM_ERR_INTERNAL:
        case MWBM_ERR_EXTRACTION_STUCK:
        case MWBM_ERR_NOT_MAXIMUM_MATCHING: return kExitInternal;
        default: return kExitInput;
    }
}

void check(mwbm_status s, const std::string& context) {
    if (s != MWBM_OK) {
        throw Failure{exit_code_for(s), context + ": " + mwbm_status_string(s) + ": " + mwbm_last_error()};
    }
}

// Owning wrappers for C handles and strings.
struct Graph {
    mwbm_graph* handle = nullptr;
    Graph() = default;
    Graph(const Graph&) = delete;
    Graph& operator=(const Graph&) = delete;
    ~Graph() { mwbm_graph_destroy(handle); }
};

struct OwnedString {
    char* ptr = nullptr;
    OwnedString() = default;
    OwnedString(const OwnedString&) = delete;
    OwnedString& operator=(const OwnedString&) = delete;
    ~OwnedString() { mwbm_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

void load(const std::string& path, Graph& g) { check(mwbm_graph_load(path.c_str(), &g.handle), path); }

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
    if (!out) throw Failure{kExitInput, "cannot write " + path};
}

mwbm_graph_info info_of(const Graph& g) {
    mwbm_graph_info info{};
    check(mwbm_graph_info_get(g.handle, &info), "info");
    return info;
}

std::vector<uint64_t> parse_range(const std::string& text, bool with_step, const std::string& flag) {
    std::vector<uint64_t> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stoull(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Failure{kExitUsage, flag + ": '" + text + "' is not a valid range"};
        }
    }
    std::size_t expected = with_step ? 3 : 2;
    if (parts.size() != expected || parts[0] > parts[1] || (with_step && parts[2] == 0)) {
        throw Failure{kExitUsage, flag + ": expected " + (with_step ? "A:B:STEP" : "A:B") + " with A <= B"};
    }
    std::vector<uint64_t> values;
    uint64_t step = with_step ? parts[2] : 1;
    for (uint64_t v = parts[0]; v <= parts[1]; v += step) values.push_back(v);
    return values;
}

std::string cover_json(const std::vector<uint64_t>& left, const std::vector<uint64_t>& right, uint64_t weight) {
    auto join = [](const std::vector<uint64_t>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    return "{\"left\":[" + join(left) + "],\"right\":[" + join(right) + "],\"weight\":" + std::to_string(weight) +
           "}\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximum weight bipartite matching by modified decomposition"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(mwbm_version()));

    std::string input, trace_out, out_path, mode = "modified";

    auto* solve = app.add_subcommand("solve", "Weight of a maximum weight matching");
    solve->add_option("--input", input, "Edge-list file")->required();
    solve->add_option("--mode", mode, "modified or baseline")->check(CLI::IsMember({"modified", "baseline"}));
    solve->add_option("--trace", trace_out, "Write the per-iteration trace as JSON");

    auto* cover = app.add_subcommand("cover", "Minimum weight cover");
    cover->add_option("--input", input, "Edge-list file")->required();
    cover->add_option("--out", out_path, "Write the cover as JSON (default: stdout)");

    auto* match = app.add_subcommand("match", "Edges of a maximum weight matching");
    match->add_option("--input", input, "Edge-list file")->required();
    match->add_option("--out", out_path, "Also write the matching as JSON");

    auto* oracle = app.add_subcommand("oracle", "Brute-force weight for small graphs");
    oracle->add_option("--input", input, "Edge-list file")->required();

    uint32_t gen_n = 0;
    uint64_t gen_weight = 0, seed = 1;
    std::string generator = "split";
    auto* gen = app.add_subcommand("gen", "Write a random instance");
    gen->add_option("--n", gen_n, "Vertices per partition")->required()->check(CLI::PositiveNumber);
    gen->add_option("--weight", gen_weight, "Total weight")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed, "Random seed");
    gen->add_option("--generator", generator, "split or unit")->check(CLI::IsMember({"split", "unit"}));
    gen->add_option("--out", out_path, "Output file")->required();

    uint32_t bench_n = 0;
    uint64_t bench_weight = 0;
    std::string n_range, weight_range, modes = "both", format = "csv";
    uint32_t repeats = 1, jobs = 1;
    bool no_average = false;
    auto* bench = app.add_subcommand("bench", "Compare modified and baseline iteration counts");
    auto* opt_n = bench->add_option("--n", bench_n, "Vertices per partition")->check(CLI::PositiveNumber);
    auto* opt_nr = bench->add_option("--n-range", n_range, "A:B partition sizes");
    auto* opt_w = bench->add_option("--weight", bench_weight, "Total weight")->check(CLI::PositiveNumber);
    auto* opt_wr = bench->add_option("--weight-range", weight_range, "A:B:STEP total weights");
    opt_n->excludes(opt_nr);
    opt_w->excludes(opt_wr);
    bench->add_option("--repeats", repeats, "Instances per cell")->check(CLI::PositiveNumber);
    bench->add_option("--seed", seed, "Base seed");
    bench->add_option("--modes", modes, "both, modified or baseline")
        ->check(CLI::IsMember({"both", "modified", "baseline"}));
    bench->add_option("--format", format, "csv, json or tsv")->check(CLI::IsMember({"csv", "json", "tsv"}));
    bench->add_option("--generator", generator, "split or unit")->check(CLI::IsMember({"split", "unit"}));
    bench->add_option("--jobs", jobs, "Cells solved concurrently")->check(CLI::PositiveNumber);
    bench->add_flag("--no-average", no_average, "One row per repeat instead of the mean");
    bench->add_option("--out", out_path, "Output file (default: stdout); metadata goes to FILE.meta.json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve) {
            Graph g;
            load(input, g);
            mwbm_solve_summary s{};
            OwnedString trace;
            check(mwbm_solve(g.handle, mode == "baseline" ? MWBM_MODE_BASELINE : MWBM_MODE_MODIFIED, &s,
                             trace_out.empty() ? nullptr : &trace.ptr),
                  "solve");
            std::cout << "weight " << s.weight << "\np " << s.iterations << "\nw_prime " << s.w_prime << '\n';
            if (!trace_out.empty()) write_file(trace_out, trace.str() + "\n");
        } else if (*cover) {
            Graph g;
            load(input, g);
            auto info = info_of(g);
            std::vector<uint64_t> left(info.n_left), right(info.n_right);
            uint64_t weight = 0;
            check(mwbm_min_cover(g.handle, left.data(), right.data(), &weight), "cover");
            std::cout << "cover_weight " << weight << '\n';
            std::string json = cover_json(left, right, weight);
            if (out_path.empty()) {
                std::cout << json;
            } else {
                write_file(out_path, json);
            }
        } else if (*match) {
            Graph g;
            load(input, g);
            auto info = info_of(g);
            std::vector<uint64_t> left(info.n_left), right(info.n_right);
            uint64_t cover_weight = 0;
            check(mwbm_min_cover(g.handle, left.data(), right.data(), &cover_weight), "cover");
            std::vector<mwbm_edge> edges(std::min(info.n_left, info.n_right));
            std::size_t count = 0;
            uint64_t weight = 0;
            check(mwbm_extract_matching(g.handle, left.data(), right.data(), edges.data(), &count, &weight), "match");
            std::string json = "{\"edges\":[";
            for (std::size_t i = 0; i < count; ++i) {
                const auto& e = edges[i];
                std::cout << "m " << e.left + 1 << ' ' << e.right + 1 << ' ' << e.weight << '\n';
                json += (i ? "," : "") + std::string("[") + std::to_string(e.left + 1) + "," +
                        std::to_string(e.right + 1) + "," + std::to_string(e.weight) + "]";
            }
            json += "],\"weight\":" + std::to_string(weight) + "}\n";
            std::cout << "weight " << weight << '\n';
            if (!out_path.empty()) write_file(out_path, json);
        } else if (*oracle) {
            Graph g;
            load(input, g);
            uint64_t weight = 0;
            check(mwbm_oracle(g.handle, &weight), "oracle");
            std::cout << "weight " << weight << '\n';
        } else if (*gen) {
            Graph g;
            check(mwbm_generate(gen_n, gen_weight, seed, generator == "unit" ? MWBM_GEN_UNIT : MWBM_GEN_SPLIT,
                                &g.handle),
                  "gen");
            check(mwbm_graph_save(g.handle, out_path.c_str()), out_path);
        } else if (*bench) {
            if (!*opt_n && !*opt_nr) throw Failure{kExitUsage, "bench: one of --n or --n-range is required"};
            if (!*opt_w && !*opt_wr) throw Failure{kExitUsage, "bench: one of --weight or --weight-range is required"};
            std::vector<uint32_t> ns;
            if (*opt_n) {
                ns.push_back(bench_n);
            } else {
                for (uint64_t v : parse_range(n_range, false, "--n-range")) {
                    if (v == 0 || v > UINT32_MAX) throw Failure{kExitUsage, "--n-range: sizes must be positive"};
                    ns.push_back(static_cast<uint32_t>(v));
                }
            }
            std::vector<uint64_t> weights;
            if (*opt_w) {
                weights.push_back(bench_weight);
            } else {
                weights = parse_range(weight_range, true, "--weight-range");
                if (weights.front() == 0) throw Failure{kExitUsage, "--weight-range: weights must be positive"};
            }

            mwbm_bench_config cfg{};
            cfg.ns = ns.data();
            cfg.n_count = ns.size();
            cfg.weights = weights.data();
            cfg.weight_count = weights.size();
            cfg.seed = seed;
            cfg.repeats = repeats;
            cfg.run_modified = modes != "baseline";
            cfg.run_baseline = modes != "modified";
            cfg.average = !no_average;
            cfg.generator = generator == "unit" ? MWBM_GEN_UNIT : MWBM_GEN_SPLIT;
            cfg.format = format == "json" ? MWBM_FORMAT_JSON : format == "tsv" ? MWBM_FORMAT_TSV : MWBM_FORMAT_CSV;
            cfg.jobs = jobs;

            OwnedString table, meta;
            check(mwbm_bench(&cfg, &table.ptr, &meta.ptr), "bench");
            if (out_path.empty()) {
                std::cout << table.str();
            } else {
                write_file(out_path, table.str());
                write_file(out_path + ".meta.json", meta.str());
            }
        }
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return f.exit_code;
    }
    return kExitOk;
}
