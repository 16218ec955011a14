#include "mwbm/cover.hpp"

#include <deque>

#include "mwbm/decomposition.hpp"
#include "mwbm/error.hpp"

namespace mwbm {

bool cover_feasible(const BipartiteGraph& g, const Cover& c) {
    if (c.left.size() != g.n_left() || c.right.size() != g.n_right()) return false;
    for (const Edge& e : g.edges()) {
        // c.left + c.right >= w, written to avoid overflow
        Weight l = c.left[e.left];
        if (l < e.weight && c.right[e.right] < e.weight - l) return false;
    }
    return true;
}

Cover min_weight_cover(const BipartiteGraph& g) {
    Cover c(g.n_left(), g.n_right());
    SolveResult r = solve_weight(g, SolveMode::Modified, c);
    if (!cover_feasible(g, c)) throw Error(Errc::Internal, "accumulated cover is infeasible");
    if (c.weight() != r.weight) {
        throw Error(Errc::Internal, "cover weight " + std::to_string(c.weight()) + " != matching weight " +
                                        std::to_string(r.weight));
    }
    return c;
}

UnitGraph tight_subgraph(const BipartiteGraph& g, const Cover& c) {
    if (!cover_feasible(g, c)) throw Error(Errc::InfeasibleCover, "cover violates an edge constraint");
    UnitGraph t(g.n_left(), g.n_right());
    for (const Edge& e : g.edges()) {
        if (c.left[e.left] <= e.weight && c.right[e.right] == e.weight - c.left[e.left]) {
            t.adjacency[e.left].push_back(e.right);
        }
    }
    return t;  // edges() is sorted by (left, right), so adjacency already is
}

Weight matching_weight(const BipartiteGraph& g, const Matching& m) {
    Weight total = 0;
    for (Index u = 0; u < m.pair_left.size(); ++u) {
        Index v = m.pair_left[u];
        if (v == kUnmatched) continue;
        Weight w = g.weight(u, v);
        if (w == 0) throw Error(Errc::InvalidArgument, "matched pair is not an edge");
        total = checked_add(total, w);
    }
    return total;
}

namespace {

// One side of the tight graph seen from the side the search starts on.
struct SideView {
    const std::vector<std::vector<Index>>& adj;  // near -> far
    std::vector<Index>& mate_near;
    std::vector<Index>& mate_far;
    const std::vector<Weight>& c_near;
    const std::vector<Weight>& c_far;
};

// Alternating-path improvement from the unmatched vertex `root`. Returns the
// weight gained, 0 if no improving path exists.
Weight improve_from(Index root, SideView s) {
    const Index n_near = static_cast<Index>(s.mate_near.size());
    const Index n_far = static_cast<Index>(s.mate_far.size());
    std::vector<Index> via_far(n_near, kUnmatched);  // far vertex that reached a near vertex
    std::vector<Index> via_near(n_far, kUnmatched);  // near vertex that reached a far vertex
    std::vector<bool> seen_near(n_near, false);
    std::vector<bool> seen_far(n_far, false);

    std::deque<Index> queue{root};
    seen_near[root] = true;
    Index best = kUnmatched;
    Index free_far = kUnmatched;

    while (!queue.empty() && free_far == kUnmatched) {
        Index x = queue.front();
        queue.pop_front();
        for (Index y : s.adj[x]) {
            if (seen_far[y] || s.mate_near[x] == y) continue;
            seen_far[y] = true;
            via_near[y] = x;
            Index z = s.mate_far[y];
            if (z == kUnmatched) {
                free_far = y;
                break;
            }
            if (seen_near[z]) continue;
            seen_near[z] = true;
            via_far[z] = y;
            if (best == kUnmatched || s.c_near[z] < s.c_near[best]) best = z;
            queue.push_back(z);
        }
    }

    auto flip_from = [&](Index y) {
        for (;;) {
            Index x = via_near[y];
            Index previous = s.mate_near[x];
            s.mate_near[x] = y;
            s.mate_far[y] = x;
            if (x == root) return;
            y = previous;
        }
    };

    if (free_far != kUnmatched) {
        flip_from(free_far);
        return s.c_near[root] + s.c_far[free_far];
    }
    if (best == kUnmatched || s.c_near[best] >= s.c_near[root]) return 0;
    Index y = via_far[best];
    s.mate_near[best] = kUnmatched;
    flip_from(y);
    return s.c_near[root] - s.c_near[best];
}

}  // namespace

WeightedMatching extract_matching(const BipartiteGraph& g, const Cover& c) {
    UnitGraph tight = tight_subgraph(g, c);
    const Weight target = c.weight();

    std::vector<std::vector<Index>> right_adj(g.n_right());
    for (Index u = 0; u < g.n_left(); ++u)
        for (Index v : tight.adjacency[u]) right_adj[v].push_back(u);

    Matching m = max_cardinality_matching(tight);
    Weight weight = matching_weight(g, m);

    while (weight < target) {
        Weight gained = 0;
        for (Index u = 0; u < g.n_left() && gained == 0; ++u) {
            if (c.left[u] > 0 && m.pair_left[u] == kUnmatched) {
                gained = improve_from(u, {tight.adjacency, m.pair_left, m.pair_right, c.left, c.right});
            }
        }
        for (Index v = 0; v < g.n_right() && gained == 0; ++v) {
            if (c.right[v] > 0 && m.pair_right[v] == kUnmatched) {
                gained = improve_from(v, {right_adj, m.pair_right, m.pair_left, c.right, c.left});
            }
        }
        if (gained == 0) {
            throw Error(Errc::ExtractionStuck, "no improving alternating path at weight " + std::to_string(weight) +
                                                  " < cover weight " + std::to_string(target) +
                                                  "; cover is not minimum");
        }
        weight += gained;
    }

    m.cardinality = 0;
    WeightedMatching out;
    for (Index u = 0; u < g.n_left(); ++u) {
        if (m.pair_left[u] == kUnmatched) continue;
        ++m.cardinality;
        out.edges.push_back({u, m.pair_left[u], g.weight(u, m.pair_left[u])});
    }
    out.weight = matching_weight(g, m);
    if (out.weight != weight) throw Error(Errc::Internal, "matching weight bookkeeping diverged");
    out.matching = std::move(m);
    return out;
}

}  // namespace mwbm
