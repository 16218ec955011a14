#ifndef MWBM_DECOMPOSITION_HPP
#define MWBM_DECOMPOSITION_HPP

#include <string>
#include <vector>

#include "mwbm/graph.hpp"
#include "mwbm/matching.hpp"

namespace mwbm {

/// Modified: step h = H1 - H2 of the working graph. Baseline: h = 1 always.
enum class SolveMode { Modified, Baseline };

const char* mode_name(SolveMode mode) noexcept;
SolveMode parse_mode(const std::string& name);

struct IterationRecord {
    std::size_t index = 0;             // 1-based
    Weight h = 0;
    std::size_t matched = 0;           // |mm(G_h)|
    Weight contribution = 0;           // h * matched
    std::size_t reduced_edges = 0;     // l_i
    std::size_t distinct_weights = 0;  // m' before the step
    Weight reduced_weight = 0;         // weight actually removed this step

    friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

struct DecompositionTrace {
    SolveMode mode = SolveMode::Modified;
    std::vector<IterationRecord> records;
    Weight w_prime = 0;               // sum of l_i
    Weight weight = 0;                // sum of contributions
    Weight sum_l_times_h = 0;         // sum of l_i * h_i

    std::size_t iterations() const noexcept { return records.size(); }

    friend bool operator==(const DecompositionTrace&, const DecompositionTrace&) = default;
};

struct SolveResult {
    Weight weight = 0;
    DecompositionTrace trace;
};

/// G_h as an unweighted graph: edges with weight in [N - h + 1, N].
/// Throws HOutOfRange unless 1 <= h <= N.
UnitGraph extract_gh(const BipartiteGraph& g, Weight h);

/// G_h with its own weights Wt(u,v) - (N - h). Outside h <= H1 - H2 these are
/// no longer uniform, which is why the solver never uses h beyond that.
BipartiteGraph extract_gh_weighted(const BipartiteGraph& g, Weight h);

/// h on every cover member, 0 elsewhere.
Cover cover_from_vc(Weight h, const VertexCoverSet& vc);

struct DeltaResult {
    BipartiteGraph graph;
    std::size_t reduced_edges = 0;
    Weight reduced_weight = 0;
};

/// G_h^delta: weights lowered by C_h(u) + C_h(v), non-positive edges dropped.
DeltaResult apply_delta(BipartiteGraph g, const Cover& ch);

/// Weight of a maximum weight matching, computed as a loop of decomposition
/// steps until the working graph has no active edge.
SolveResult solve_weight(const BipartiteGraph& g, SolveMode mode);

/// Same loop, additionally accumulating sum of C_h over the steps into `cover`
/// (which must be sized for g).
SolveResult solve_weight(const BipartiteGraph& g, SolveMode mode, Cover& cover);

/// h * |mm(G_h)| + weight(G_h^delta) == weight(G). Throws HOutOfRange when h is
/// outside [1, H1 - H2] or the graph is empty.
bool check_decomposition_identity(const BipartiteGraph& g, Weight h);

/// {mode, weight, p, w_prime, iterations:[{i,h,matched,contribution,l,...}]}
std::string trace_to_json(const DecompositionTrace& trace);
DecompositionTrace trace_from_json(const std::string& text);

}  // namespace mwbm

#endif  // MWBM_DECOMPOSITION_HPP
