#ifndef MWBM_MATCHING_HPP
#define MWBM_MATCHING_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "mwbm/graph.hpp"

namespace mwbm {

inline constexpr Index kUnmatched = std::numeric_limits<Index>::max();

/// Unweighted bipartite graph. Adjacency lists hold right-vertex indices and
/// are kept sorted; every search below scans them in that order, which is what
/// makes matchings and covers reproducible.
struct UnitGraph {
    Index n_left = 0;
    Index n_right = 0;
    std::vector<std::vector<Index>> adjacency;

    UnitGraph() = default;
    UnitGraph(Index nl, Index nr) : n_left(nl), n_right(nr), adjacency(nl) {}

    std::size_t edge_count() const noexcept;
    bool has_edge(Index left, Index right) const noexcept;

    // Sort and deduplicate adjacency lists after manual construction.
    void normalize();

    friend bool operator==(const UnitGraph&, const UnitGraph&) = default;
};

struct Matching {
    std::vector<Index> pair_left;   // left -> right or kUnmatched
    std::vector<Index> pair_right;  // right -> left or kUnmatched
    std::size_t cardinality = 0;

    Matching() = default;
    Matching(Index nl, Index nr) : pair_left(nl, kUnmatched), pair_right(nr, kUnmatched) {}

    bool is_matched(VertexId v) const {
        return (v.side == Side::Left ? pair_left[v.index] : pair_right[v.index]) != kUnmatched;
    }

    // Both maps inverse of each other and cardinality consistent.
    bool consistent() const;

    friend bool operator==(const Matching&, const Matching&) = default;
};

struct VertexCoverSet {
    std::vector<bool> left;
    std::vector<bool> right;

    std::size_t size() const noexcept;
    bool contains(VertexId v) const { return v.side == Side::Left ? left[v.index] : right[v.index]; }
    std::vector<VertexId> members() const;

    friend bool operator==(const VertexCoverSet&, const VertexCoverSet&) = default;
};

/// Hopcroft-Karp. Phases scan free left vertices in index order and neighbours
/// in adjacency order.
Matching max_cardinality_matching(const UnitGraph& g);

/// König: with Z the vertices reachable from free left vertices by alternating
/// paths, the cover is (Left \ Z) u (Right n Z). Throws NotMaximumMatching if
/// the matching is not a maximum matching of g.
VertexCoverSet koenig_vertex_cover(const UnitGraph& g, const Matching& m);

}  // namespace mwbm

#endif  // MWBM_MATCHING_HPP
