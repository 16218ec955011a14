#ifndef MWBM_ORACLE_HPP
#define MWBM_ORACLE_HPP

#include "mwbm/graph.hpp"
#include "mwbm/matching.hpp"

namespace mwbm {

// Brute-force ground truth for small instances. Neither routine shares code
// with the decomposition solver.

inline constexpr Index kOracleMaxSmallSide = 15;
inline constexpr std::size_t kEnumerateMaxEdges = 20;

struct OracleResult {
    Weight weight = 0;
    Matching matching;  // one optimal witness
};

/// Bitmask DP over subsets of the smaller partition. Throws TooLarge when
/// min(n1, n2) > kOracleMaxSmallSide.
OracleResult oracle_mwm(const BipartiteGraph& g);

/// Maximum over all 2^|E| edge subsets that form a matching. Throws TooLarge
/// when |E| > kEnumerateMaxEdges.
Weight oracle_enumerate(const BipartiteGraph& g);

}  // namespace mwbm

#endif  // MWBM_ORACLE_HPP
