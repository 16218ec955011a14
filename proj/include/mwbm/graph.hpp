#ifndef MWBM_GRAPH_HPP
#define MWBM_GRAPH_HPP

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace mwbm {

using Weight = std::uint64_t;
using Index = std::uint32_t;

enum class Side : std::uint8_t { Left, Right };

struct VertexId {
    Side side;
    Index index;

    friend bool operator==(const VertexId&, const VertexId&) = default;
};

// An active edge. Left and right indices are 0-based within their partition.
struct Edge {
    Index left;
    Index right;
    Weight weight;

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct EdgeKey {
    Index left;
    Index right;

    friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

// Distinct weight -> edges carrying it, each list sorted by (left, right).
using WeightBuckets = std::map<Weight, std::vector<EdgeKey>>;

struct Cover;

/// Bipartite graph with positive integer edge weights.
///
/// Edges are kept sorted by (left, right); absent pairs are inactive (weight 0)
/// and never stored. The bucket index over distinct weights always mirrors the
/// edge list, so the heaviest weights are available in logarithmic time.
class BipartiteGraph {
public:
    BipartiteGraph() = default;

    /// Validates and builds. Throws Error with IndexOutOfRange,
    /// ZeroOrNegativeWeight, DuplicateEdge or Overflow.
    static BipartiteGraph build(Index n_left, Index n_right, std::span<const Edge> edges);

    Index n_left() const noexcept { return n_left_; }
    Index n_right() const noexcept { return n_right_; }
    bool empty() const noexcept { return edges_.empty(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const WeightBuckets& buckets() const noexcept { return buckets_; }
    std::size_t distinct_weight_count() const noexcept { return buckets_.size(); }

    Weight total_weight() const noexcept { return total_weight_; }
    /// Largest edge weight N, 0 for an empty graph.
    Weight max_weight() const noexcept;

    /// Weight of the (left, right) pair, 0 if the edge is absent.
    Weight weight(Index left, Index right) const noexcept;

    /// (H1, H2): the two largest distinct weights, H2 = 0 when only one exists.
    std::pair<Weight, Weight> top_two_weights() const;

    Weight weight_gcd() const;

    /// Every weight multiplied by alpha. Throws Overflow rather than wrapping.
    BipartiteGraph scale_weights(Weight alpha) const;

    struct Reduction {
        std::size_t changed = 0;  // edges whose weight was lowered or dropped
        std::size_t dropped = 0;
        Weight removed = 0;       // total weight taken out of the graph
    };

    /// In place: Wt(u,v) -= C(u) + C(v) on every edge with a covered endpoint,
    /// dropping edges that reach zero or below. Buckets are updated alongside.
    Reduction subtract_cover(const Cover& cover);

    friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
        return a.n_left_ == b.n_left_ && a.n_right_ == b.n_right_ && a.edges_ == b.edges_;
    }

private:
    void rebuild_buckets();

    Index n_left_ = 0;
    Index n_right_ = 0;
    std::vector<Edge> edges_;
    WeightBuckets buckets_;
    Weight total_weight_ = 0;
};

/// Vertex potentials over both partitions. A cover of G is feasible when
/// C(u) + C(v) >= Wt(u, v) for every edge.
struct Cover {
    std::vector<Weight> left;
    std::vector<Weight> right;

    Cover() = default;
    Cover(Index n_left, Index n_right) : left(n_left, 0), right(n_right, 0) {}

    Weight value(VertexId v) const { return v.side == Side::Left ? left[v.index] : right[v.index]; }

    /// Sum of all potentials. Throws Overflow.
    Weight weight() const;

    friend bool operator==(const Cover&, const Cover&) = default;
};

// Checked arithmetic shared by the modules.
Weight checked_add(Weight a, Weight b);
Weight checked_mul(Weight a, Weight b);

}  // namespace mwbm

#endif  // MWBM_GRAPH_HPP
