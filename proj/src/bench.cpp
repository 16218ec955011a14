#include "mwbm/bench.hpp"

#include <charconv>
#include <chrono>
#include <future>
#include <map>
#include <sstream>

#include <json.hpp>

#include "mwbm/error.hpp"

namespace mwbm {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept {
    return splitmix64(base ^ splitmix64(stream));
}

std::uint64_t cell_seed(std::uint64_t base, Index n, Weight total_weight) noexcept {
    return derive_seed(derive_seed(base, n), total_weight);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw Error(Errc::InvalidArgument, "empty range");
    // Reject the low (2^64 mod bound) values so that x % bound is unbiased.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t x = engine_();
        if (x >= threshold) return x % bound;
    }
}

const char* gen_method_name(GenMethod m) noexcept {
    return m == GenMethod::RandomSplit ? "split" : "unit";
}

GenMethod parse_gen_method(const std::string& name) {
    if (name == "split") return GenMethod::RandomSplit;
    if (name == "unit") return GenMethod::UnitIncrement;
    throw Error(Errc::InvalidArgument, "unknown generator '" + name + "'");
}

BipartiteGraph gen_random_graph(const InstanceSpec& spec) {
    if (spec.n == 0 || spec.total_weight == 0) {
        throw Error(Errc::InvalidArgument, "instance needs n >= 1 and W >= 1");
    }
    const std::uint64_t pairs = checked_mul(spec.n, spec.n);
    Rng rng(spec.seed);
    std::map<std::uint64_t, Weight> weights;

    Weight remaining = spec.total_weight;
    while (remaining > 0) {
        std::uint64_t pair = rng.below(pairs);
        Weight w = spec.method == GenMethod::RandomSplit ? 1 + rng.below(remaining) : 1;
        weights[pair] += w;
        remaining -= w;
    }

    std::vector<Edge> edges;
    edges.reserve(weights.size());
    for (auto [pair, w] : weights) {
        edges.push_back({static_cast<Index>(pair / spec.n), static_cast<Index>(pair % spec.n), w});
    }
    return BipartiteGraph::build(spec.n, spec.n, edges);
}

namespace {

struct Cell {
    InstanceSpec spec;
    SolveMode mode;
};

BenchRow run_cell(const Cell& cell, bool warmup) {
    BipartiteGraph g = gen_random_graph(cell.spec);
    if (warmup) (void)solve_weight(g, cell.mode);
    auto start = std::chrono::steady_clock::now();
    SolveResult r = solve_weight(g, cell.mode);
    auto stop = std::chrono::steady_clock::now();

    BenchRow row;
    row.n = cell.spec.n;
    row.total_weight = cell.spec.total_weight;
    row.mode = cell.mode;
    row.iterations = static_cast<double>(r.trace.iterations());
    row.w_prime = static_cast<double>(r.trace.w_prime);
    row.weight = static_cast<double>(r.weight);
    row.time_sec = std::chrono::duration<double>(stop - start).count();
    row.seed = cell.spec.seed;
    return row;
}

}  // namespace

std::vector<BenchRow> run_experiment(const std::vector<InstanceSpec>& specs, const std::vector<SolveMode>& modes,
                                     const ExperimentOptions& options) {
    if (options.repeats == 0) throw Error(Errc::InvalidArgument, "repeats must be positive");

    std::vector<Cell> cells;
    for (const auto& spec : specs) {
        for (SolveMode mode : modes) {
            for (unsigned r = 0; r < options.repeats; ++r) {
                InstanceSpec s = spec;
                if (options.repeats > 1) s.seed = derive_seed(spec.seed, r);
                cells.push_back({s, mode});
            }
        }
    }

    std::vector<BenchRow> raw(cells.size());
    const unsigned jobs = std::max(1U, options.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) raw[i] = run_cell(cells[i], options.warmup);
    } else {
        for (std::size_t begin = 0; begin < cells.size(); begin += jobs) {
            std::vector<std::future<BenchRow>> batch;
            std::size_t end = std::min(cells.size(), begin + jobs);
            for (std::size_t i = begin; i < end; ++i) {
                batch.push_back(std::async(std::launch::async, run_cell, cells[i], options.warmup));
            }
            for (std::size_t i = begin; i < end; ++i) raw[i] = batch[i - begin].get();
        }
    }

    if (!options.average || options.repeats == 1) return raw;

    std::vector<BenchRow> averaged;
    for (std::size_t i = 0; i < raw.size(); i += options.repeats) {
        BenchRow row = raw[i];
        row.seed = specs[i / (options.repeats * modes.size())].seed;
        row.iterations = row.w_prime = row.weight = row.time_sec = 0;
        for (std::size_t k = i; k < i + options.repeats; ++k) {
            row.iterations += raw[k].iterations;
            row.w_prime += raw[k].w_prime;
            row.weight += raw[k].weight;
            row.time_sec += raw[k].time_sec;
        }
        const double n = options.repeats;
        row.iterations /= n;
        row.w_prime /= n;
        row.weight /= n;
        row.time_sec /= n;
        averaged.push_back(row);
    }
    return averaged;
}

RowFormat parse_row_format(const std::string& name) {
    if (name == "csv") return RowFormat::Csv;
    if (name == "json") return RowFormat::Json;
    if (name == "tsv") return RowFormat::Tsv;
    throw Error(Errc::InvalidArgument, "unknown format '" + name + "'");
}

namespace {

// Shortest round-trip representation; integral values print without a point.
std::string format_number(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

}  // namespace

std::string emit(const std::vector<BenchRow>& rows, RowFormat format) {
    if (format == RowFormat::Json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            j.push_back({{"n", r.n},
                         {"W", r.total_weight},
                         {"mode", mode_name(r.mode)},
                         {"iterations", r.iterations},
                         {"w_prime", r.w_prime},
                         {"weight", r.weight},
                         {"time", r.time_sec},
                         {"seed", r.seed}});
        }
        return j.dump(2) + "\n";
    }

    const char sep = format == RowFormat::Csv ? ',' : '\t';
    std::ostringstream out;
    out << "n" << sep << "W" << sep << "mode" << sep << "iterations" << sep << "w_prime" << sep << "weight" << sep
        << "time" << sep << "seed\n";
    for (const auto& r : rows) {
        out << r.n << sep << r.total_weight << sep << mode_name(r.mode) << sep << format_number(r.iterations) << sep
            << format_number(r.w_prime) << sep << format_number(r.weight) << sep << format_number(r.time_sec) << sep
            << r.seed << '\n';
    }
    return out.str();
}

std::vector<BenchRow> parse_rows_json(const std::string& text) {
    std::vector<BenchRow> rows;
    try {
        for (const auto& j : nlohmann::json::parse(text)) {
            BenchRow r;
            r.n = j.at("n").get<Index>();
            r.total_weight = j.at("W").get<Weight>();
            r.mode = parse_mode(j.at("mode").get<std::string>());
            r.iterations = j.at("iterations").get<double>();
            r.w_prime = j.at("w_prime").get<double>();
            r.weight = j.at("weight").get<double>();
            r.time_sec = j.at("time").get<double>();
            r.seed = j.at("seed").get<std::uint64_t>();
            rows.push_back(r);
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, std::string("malformed bench rows: ") + e.what());
    }
    return rows;
}

std::string bench_metadata(GenMethod method) {
    nlohmann::ordered_json j;
    j["rng"] = kRngName;
    j["rng_version"] = kRngVersion;
    j["generator"] = gen_method_name(method);
    j["timing"] = "steady_clock, solve only, after one warm-up solve";
    return j.dump(2) + "\n";
}

}  // namespace mwbm
