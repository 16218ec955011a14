#ifndef MWBM_BENCH_HPP
#define MWBM_BENCH_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mwbm/decomposition.hpp"
#include "mwbm/graph.hpp"

namespace mwbm {

// Identity of the random stream; written into bench metadata.
inline constexpr const char* kRngName = "mt19937_64+rejection-bounded+splitmix64-derive";
inline constexpr int kRngVersion = 1;

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed for the r-th repeat of an instance stream.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept;

/// mt19937_64 with a bounded draw that does not depend on the standard
/// library's distribution implementations, so streams match across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

/// Seed of the (n, W) cell of a bench grid, so cells sharing a base seed do
/// not replay the same draws.
std::uint64_t cell_seed(std::uint64_t base, Index n, Weight total_weight) noexcept;

enum class GenMethod {
    // Pick a uniform pair, give it a uniform weight in [1, remaining], repeat
    // until the total is spent.
    RandomSplit,
    // W unit increments, each on a uniform pair.
    UnitIncrement,
};

const char* gen_method_name(GenMethod m) noexcept;
GenMethod parse_gen_method(const std::string& name);

struct InstanceSpec {
    Index n = 1;
    Weight total_weight = 1;
    std::uint64_t seed = 0;
    GenMethod method = GenMethod::RandomSplit;
};

/// n x n instance with total weight exactly spec.total_weight. Pairs never
/// drawn are absent. Deterministic in the spec.
BipartiteGraph gen_random_graph(const InstanceSpec& spec);

struct BenchRow {
    Index n = 0;
    Weight total_weight = 0;
    SolveMode mode = SolveMode::Modified;
    double iterations = 0;
    double w_prime = 0;
    double weight = 0;
    double time_sec = 0;
    std::uint64_t seed = 0;

    friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct ExperimentOptions {
    unsigned repeats = 1;
    bool average = true;   // one row per (spec, mode) instead of per repeat
    bool warmup = true;    // untimed solve before the timed one
    unsigned jobs = 1;     // cells solved concurrently; output order is unchanged
};

/// Rows ordered by spec, then mode as given, then repeat. With repeats > 1 each
/// repeat r uses derive_seed(spec.seed, r); with a single repeat the spec seed
/// is used as is. Averaged rows report the base seed.
std::vector<BenchRow> run_experiment(const std::vector<InstanceSpec>& specs, const std::vector<SolveMode>& modes,
                                     const ExperimentOptions& options);

enum class RowFormat { Csv, Json, Tsv };

RowFormat parse_row_format(const std::string& name);

/// Columns: n, W, mode, iterations, w_prime, weight, time, seed.
std::string emit(const std::vector<BenchRow>& rows, RowFormat format);
std::vector<BenchRow> parse_rows_json(const std::string& text);

/// Rng identity and generator used, as a JSON object.
std::string bench_metadata(GenMethod method);

}  // namespace mwbm

#endif  // MWBM_BENCH_HPP
