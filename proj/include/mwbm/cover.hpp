#ifndef MWBM_COVER_HPP
#define MWBM_COVER_HPP

#include <vector>

#include "mwbm/graph.hpp"
#include "mwbm/matching.hpp"

namespace mwbm {

bool cover_feasible(const BipartiteGraph& g, const Cover& c);

/// Minimum weight cover as the sum of the per-step covers C_h of the modified
/// decomposition. Its weight is checked against the solved matching weight;
/// a mismatch throws Internal.
Cover min_weight_cover(const BipartiteGraph& g);

/// Edges with Wt(u,v) == C(u) + C(v). Throws InfeasibleCover.
UnitGraph tight_subgraph(const BipartiteGraph& g, const Cover& c);

struct WeightedMatching {
    Matching matching;
    std::vector<Edge> edges;  // sorted by left index
    Weight weight = 0;
};

/// Maximum weight matching recovered from a minimum weight cover.
///
/// Starts from a maximum cardinality matching of the tight subgraph, then
/// while a positive-cover vertex v is unmatched, flips an even alternating
/// path from v to a matched vertex w of smaller potential. Each flip raises
/// the weight by C(v) - C(w). Throws ExtractionStuck if no such path exists
/// before the weight reaches Wt(C).
WeightedMatching extract_matching(const BipartiteGraph& g, const Cover& c);

/// Sum of edge weights of g over the pairs of m. Throws InvalidArgument if a
/// pair is not an edge of g.
Weight matching_weight(const BipartiteGraph& g, const Matching& m);

}  // namespace mwbm

#endif  // MWBM_COVER_HPP
