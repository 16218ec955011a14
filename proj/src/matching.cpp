#include "mwbm/matching.hpp"

#include <algorithm>
#include <deque>

#include "mwbm/error.hpp"

namespace mwbm {

std::size_t UnitGraph::edge_count() const noexcept {
    std::size_t n = 0;
    for (const auto& adj : adjacency) n += adj.size();
    return n;
}

bool UnitGraph::has_edge(Index left, Index right) const noexcept {
    if (left >= adjacency.size()) return false;
    const auto& adj = adjacency[left];
    return std::binary_search(adj.begin(), adj.end(), right);
}

void UnitGraph::normalize() {
    for (auto& adj : adjacency) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
}

bool Matching::consistent() const {
    std::size_t count = 0;
    for (Index u = 0; u < pair_left.size(); ++u) {
        Index v = pair_left[u];
        if (v == kUnmatched) continue;
        if (v >= pair_right.size() || pair_right[v] != u) return false;
        ++count;
    }
    for (Index v = 0; v < pair_right.size(); ++v) {
        Index u = pair_right[v];
        if (u != kUnmatched && (u >= pair_left.size() || pair_left[u] != v)) return false;
    }
    return count == cardinality;
}

std::size_t VertexCoverSet::size() const noexcept {
    return static_cast<std::size_t>(std::count(left.begin(), left.end(), true) +
                                    std::count(right.begin(), right.end(), true));
}

std::vector<VertexId> VertexCoverSet::members() const {
    std::vector<VertexId> out;
    for (Index i = 0; i < left.size(); ++i)
        if (left[i]) out.push_back({Side::Left, i});
    for (Index i = 0; i < right.size(); ++i)
        if (right[i]) out.push_back({Side::Right, i});
    return out;
}

namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

class HopcroftKarp {
public:
    explicit HopcroftKarp(const UnitGraph& g)
        : g_(g), m_(g.n_left, g.n_right), dist_(g.n_left), next_(g.n_left) {}

    Matching run() {
        while (layer()) {
            std::fill(next_.begin(), next_.end(), 0);
            for (Index u = 0; u < g_.n_left; ++u) {
                if (m_.pair_left[u] == kUnmatched && augment(u)) ++m_.cardinality;
            }
        }
        return std::move(m_);
    }

private:
    // BFS from all free left vertices; true if some free right vertex is reachable.
    bool layer() {
        std::deque<Index> queue;
        for (Index u = 0; u < g_.n_left; ++u) {
            if (m_.pair_left[u] == kUnmatched) {
                dist_[u] = 0;
                queue.push_back(u);
            } else {
                dist_[u] = kInf;
            }
        }
        bool found = false;
        while (!queue.empty()) {
            Index u = queue.front();
            queue.pop_front();
            for (Index v : g_.adjacency[u]) {
                Index w = m_.pair_right[v];
                if (w == kUnmatched) {
                    found = true;
                } else if (dist_[w] == kInf) {
                    dist_[w] = dist_[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        return found;
    }

    // Iterative layered DFS. stack_[k] is a left vertex whose current candidate
    // edge is adjacency[stack_[k]][next_[stack_[k]]].
    bool augment(Index root) {
        stack_.clear();
        stack_.push_back(root);
        while (!stack_.empty()) {
            Index u = stack_.back();
            const auto& adj = g_.adjacency[u];
            if (next_[u] == adj.size()) {
                dist_[u] = kInf;
                stack_.pop_back();
                if (!stack_.empty()) ++next_[stack_.back()];
                continue;
            }
            Index v = adj[next_[u]];
            Index w = m_.pair_right[v];
            if (w == kUnmatched) {
                for (Index x : stack_) {
                    Index y = g_.adjacency[x][next_[x]];
                    m_.pair_left[x] = y;
                    m_.pair_right[y] = x;
                }
                return true;
            }
            if (dist_[w] != kInf && dist_[w] == dist_[u] + 1) {
                stack_.push_back(w);
            } else {
                ++next_[u];
            }
        }
        return false;
    }

    const UnitGraph& g_;
    Matching m_;
    std::vector<std::uint32_t> dist_;
    std::vector<std::size_t> next_;
    std::vector<Index> stack_;
};

}  // namespace

Matching max_cardinality_matching(const UnitGraph& g) {
    return HopcroftKarp(g).run();
}

VertexCoverSet koenig_vertex_cover(const UnitGraph& g, const Matching& m) {
    if (m.pair_left.size() != g.n_left || m.pair_right.size() != g.n_right || !m.consistent()) {
        throw Error(Errc::InvalidArgument, "matching does not fit the graph");
    }
    for (Index u = 0; u < g.n_left; ++u) {
        if (m.pair_left[u] != kUnmatched && !g.has_edge(u, m.pair_left[u])) {
            throw Error(Errc::InvalidArgument, "matched pair is not an edge");
        }
    }

    std::vector<bool> z_left(g.n_left, false);
    std::vector<bool> z_right(g.n_right, false);
    std::deque<Index> queue;
    for (Index u = 0; u < g.n_left; ++u) {
        if (m.pair_left[u] == kUnmatched) {
            z_left[u] = true;
            queue.push_back(u);
        }
    }
    while (!queue.empty()) {
        Index u = queue.front();
        queue.pop_front();
        for (Index v : g.adjacency[u]) {
            if (z_right[v] || m.pair_left[u] == v) continue;
            z_right[v] = true;
            Index w = m.pair_right[v];
            if (w != kUnmatched && !z_left[w]) {
                z_left[w] = true;
                queue.push_back(w);
            }
        }
    }

    VertexCoverSet cover;
    cover.left.resize(g.n_left);
    cover.right = std::move(z_right);
    for (Index u = 0; u < g.n_left; ++u) cover.left[u] = !z_left[u];

    bool ok = cover.size() == m.cardinality;
    for (Index u = 0; ok && u < g.n_left; ++u) {
        for (Index v : g.adjacency[u]) {
            if (!cover.left[u] && !cover.right[v]) {
                ok = false;
                break;
            }
        }
    }
    if (!ok) throw Error(Errc::NotMaximumMatching, "matching admits an augmenting path");
    return cover;
}

}  // namespace mwbm
