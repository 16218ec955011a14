#include "mwbm/oracle.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "mwbm/error.hpp"

namespace mwbm {

OracleResult oracle_mwm(const BipartiteGraph& g) {
    const bool small_left = g.n_left() <= g.n_right();
    const Index n_small = small_left ? g.n_left() : g.n_right();
    const Index n_large = small_left ? g.n_right() : g.n_left();
    if (n_small > kOracleMaxSmallSide) {
        throw Error(Errc::TooLarge, "oracle limited to min(n1,n2) <= " + std::to_string(kOracleMaxSmallSide) +
                                        ", got " + std::to_string(n_small));
    }

    // For each large-side vertex: (small-side partner, weight).
    std::vector<std::vector<std::pair<Index, Weight>>> partners(n_large);
    for (const Edge& e : g.edges()) {
        if (small_left) {
            partners[e.right].push_back({e.left, e.weight});
        } else {
            partners[e.left].push_back({e.right, e.weight});
        }
    }

    const std::size_t states = std::size_t{1} << n_small;
    constexpr Weight kUnreachable = ~Weight{0};
    constexpr std::int8_t kSkip = -1;

    // best[mask] after processing a prefix of the large side; choice[k][mask]
    // records what large vertex k did to reach mask.
    std::vector<Weight> best(states, kUnreachable), next(states);
    std::vector<std::vector<std::int8_t>> choice(n_large, std::vector<std::int8_t>(states, kSkip));
    best[0] = 0;

    for (Index k = 0; k < n_large; ++k) {
        next = best;
        for (std::size_t mask = 0; mask < states; ++mask) {
            if (best[mask] == kUnreachable) continue;
            for (auto [s, w] : partners[k]) {
                std::size_t bit = std::size_t{1} << s;
                if (mask & bit) continue;
                Weight cand = checked_add(best[mask], w);
                if (next[mask | bit] == kUnreachable || cand > next[mask | bit]) {
                    next[mask | bit] = cand;
                    choice[k][mask | bit] = static_cast<std::int8_t>(s);
                }
            }
        }
        best.swap(next);
    }

    std::size_t arg = 0;
    for (std::size_t mask = 0; mask < states; ++mask) {
        if (best[mask] != kUnreachable && best[mask] > best[arg]) arg = mask;
    }

    OracleResult out;
    out.weight = best[arg];
    out.matching = Matching(g.n_left(), g.n_right());
    std::size_t mask = arg;
    for (Index k = n_large; k-- > 0;) {
        std::int8_t s = choice[k][mask];
        if (s == kSkip) continue;
        mask &= ~(std::size_t{1} << s);
        Index l = small_left ? static_cast<Index>(s) : k;
        Index r = small_left ? k : static_cast<Index>(s);
        out.matching.pair_left[l] = r;
        out.matching.pair_right[r] = l;
        ++out.matching.cardinality;
    }
    return out;
}

Weight oracle_enumerate(const BipartiteGraph& g) {
    const auto& edges = g.edges();
    if (edges.size() > kEnumerateMaxEdges) {
        throw Error(Errc::TooLarge, "enumeration limited to " + std::to_string(kEnumerateMaxEdges) + " edges, got " +
                                        std::to_string(edges.size()));
    }
    Weight best = 0;
    std::vector<bool> used_left(g.n_left()), used_right(g.n_right());
    const std::uint32_t subsets = std::uint32_t{1} << edges.size();
    for (std::uint32_t s = 0; s < subsets; ++s) {
        std::fill(used_left.begin(), used_left.end(), false);
        std::fill(used_right.begin(), used_right.end(), false);
        Weight total = 0;
        bool valid = true;
        for (std::size_t i = 0; i < edges.size() && valid; ++i) {
            if (!(s >> i & 1U)) continue;
            const Edge& e = edges[i];
            if (used_left[e.left] || used_right[e.right]) {
                valid = false;
            } else {
                used_left[e.left] = used_right[e.right] = true;
                total = checked_add(total, e.weight);
            }
        }
        if (valid && total > best) best = total;
    }
    return best;
}

}  // namespace mwbm
