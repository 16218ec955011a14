#include "mwbm/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "mwbm/error.hpp"

namespace mwbm {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::DuplicateEdge: return "DuplicateEdge";
        case Errc::ZeroOrNegativeWeight: return "ZeroOrNegativeWeight";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::EmptyGraph: return "EmptyGraph";
        case Errc::Overflow: return "Overflow";
        case Errc::ParseError: return "ParseError";
        case Errc::IoError: return "IoError";
        case Errc::HOutOfRange: return "HOutOfRange";
        case Errc::NotMaximumMatching: return "NotMaximumMatching";
        case Errc::InfeasibleCover: return "InfeasibleCover";
        case Errc::ExtractionStuck: return "ExtractionStuck";
        case Errc::TooLarge: return "TooLarge";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

Weight checked_add(Weight a, Weight b) {
    if (a > std::numeric_limits<Weight>::max() - b) {
        throw Error(Errc::Overflow, "weight sum overflows 64 bits");
    }
    return a + b;
}

Weight checked_mul(Weight a, Weight b) {
    if (a != 0 && b > std::numeric_limits<Weight>::max() / a) {
        throw Error(Errc::Overflow, "weight product overflows 64 bits");
    }
    return a * b;
}

Weight Cover::weight() const {
    Weight total = 0;
    for (Weight w : left) total = checked_add(total, w);
    for (Weight w : right) total = checked_add(total, w);
    return total;
}

BipartiteGraph BipartiteGraph::build(Index n_left, Index n_right, std::span<const Edge> edges) {
    if (n_left == 0 || n_right == 0) {
        throw Error(Errc::InvalidArgument, "both partitions must be non-empty");
    }
    BipartiteGraph g;
    g.n_left_ = n_left;
    g.n_right_ = n_right;
    g.edges_.assign(edges.begin(), edges.end());

    for (const Edge& e : g.edges_) {
        if (e.left >= n_left || e.right >= n_right) {
            throw Error(Errc::IndexOutOfRange, "edge (" + std::to_string(e.left + 1ULL) + "," +
                                                   std::to_string(e.right + 1ULL) +
                                                   ") outside partitions " + std::to_string(n_left) +
                                                   "x" + std::to_string(n_right));
        }
        if (e.weight == 0) {
            throw Error(Errc::ZeroOrNegativeWeight, "edge (" + std::to_string(e.left + 1ULL) + "," +
                                                        std::to_string(e.right + 1ULL) +
                                                        ") has non-positive weight");
        }
    }

    std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
        return EdgeKey{a.left, a.right} < EdgeKey{b.left, b.right};
    });
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
        return a.left == b.left && a.right == b.right;
    });
    if (dup != g.edges_.end()) {
        throw Error(Errc::DuplicateEdge, "duplicate edge (" + std::to_string(dup->left + 1ULL) + "," +
                                             std::to_string(dup->right + 1ULL) + ")");
    }

    g.rebuild_buckets();
    return g;
}

void BipartiteGraph::rebuild_buckets() {
    buckets_.clear();
    total_weight_ = 0;
    for (const Edge& e : edges_) {
        buckets_[e.weight].push_back({e.left, e.right});
        total_weight_ = checked_add(total_weight_, e.weight);
    }
}

Weight BipartiteGraph::max_weight() const noexcept {
    return buckets_.empty() ? 0 : buckets_.rbegin()->first;
}

Weight BipartiteGraph::weight(Index left, Index right) const noexcept {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), EdgeKey{left, right},
                               [](const Edge& e, const EdgeKey& k) { return EdgeKey{e.left, e.right} < k; });
    if (it == edges_.end() || it->left != left || it->right != right) return 0;
    return it->weight;
}

std::pair<Weight, Weight> BipartiteGraph::top_two_weights() const {
    if (buckets_.empty()) throw Error(Errc::EmptyGraph, "graph has no edges");
    auto it = buckets_.rbegin();
    Weight h1 = it->first;
    ++it;
    Weight h2 = it == buckets_.rend() ? 0 : it->first;
    return {h1, h2};
}

Weight BipartiteGraph::weight_gcd() const {
    if (buckets_.empty()) throw Error(Errc::EmptyGraph, "graph has no edges");
    Weight g = 0;
    for (const auto& [w, keys] : buckets_) g = std::gcd(g, w);
    return g;
}

BipartiteGraph BipartiteGraph::scale_weights(Weight alpha) const {
    if (alpha == 0) throw Error(Errc::InvalidArgument, "scale factor must be positive");
    BipartiteGraph out = *this;
    for (Edge& e : out.edges_) e.weight = checked_mul(e.weight, alpha);
    out.rebuild_buckets();
    return out;
}

BipartiteGraph::Reduction BipartiteGraph::subtract_cover(const Cover& cover) {
    if (cover.left.size() != n_left_ || cover.right.size() != n_right_) {
        throw Error(Errc::InvalidArgument, "cover dimensions do not match graph");
    }
    Reduction r;
    std::vector<Edge> kept;
    kept.reserve(edges_.size());

    for (const Edge& e : edges_) {
        Weight cut = checked_add(cover.left[e.left], cover.right[e.right]);
        if (cut == 0) {
            kept.push_back(e);
            continue;
        }
        ++r.changed;

        auto bucket = buckets_.find(e.weight);
        auto& keys = bucket->second;
        keys.erase(std::lower_bound(keys.begin(), keys.end(), EdgeKey{e.left, e.right}));
        if (keys.empty()) buckets_.erase(bucket);

        if (cut >= e.weight) {
            ++r.dropped;
            r.removed += e.weight;
            continue;
        }
        r.removed += cut;
        Edge reduced{e.left, e.right, e.weight - cut};
        auto& target = buckets_[reduced.weight];
        target.insert(std::lower_bound(target.begin(), target.end(), EdgeKey{e.left, e.right}),
                      EdgeKey{e.left, e.right});
        kept.push_back(reduced);
    }

    edges_ = std::move(kept);
    total_weight_ -= r.removed;
    return r;
}

}  // namespace mwbm
