#pragma once

#include <cstddef>
#include <numeric>
#include <queue>
#include <vector>

#include "packmeasure/graph.hpp"

namespace packmeasure {

// A d-packing: every pair of members is at hop distance > d. `members` keeps
// the greedy selection order. `truncated` is set by k_d_packing when the
// maximal packing ran out before reaching k.
struct Packing {
    unsigned d = 0;
    std::vector<VertexId> members;
    bool truncated = false;
};

// Greedy maximal d-packing: repeatedly take the highest-degree surviving
// vertex (degree frozen from the original graph, ties by lowest index) and
// delete everything within distance d of it. Every vertex of g ends up
// within distance d of some member.
inline Packing maximal_d_packing(const Graph& g, unsigned d) {
    std::size_t n = g.vertex_count();
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });

    Packing packing{d, {}, false};
    std::vector<bool> removed(n, false);
    std::vector<std::uint32_t> stamp(n, 0);  // per-ball visited epoch
    std::uint32_t epoch = 0;
    std::queue<std::pair<VertexId, unsigned>> q;
    for (VertexId v : order) {
        if (removed[v]) continue;
        packing.members.push_back(v);
        // truncated BFS to depth d; distances taken in the original graph so
        // the pairwise > d guarantee holds regardless of deletion order
        ++epoch;
        removed[v] = true;
        if (d == 0) continue;
        stamp[v] = epoch;
        q.emplace(v, 0);
        while (!q.empty()) {
            auto [u, du] = q.front();
            q.pop();
            if (du == d) continue;
            for (VertexId w : g.neighbors(u)) {
                if (stamp[w] != epoch) {
                    stamp[w] = epoch;
                    removed[w] = true;
                    q.emplace(w, du + 1);
                }
            }
        }
    }
    return packing;
}

// First min(k, |maximal packing|) members, selection order preserved.
inline Packing k_d_packing(const Graph& g, std::size_t k, unsigned d) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    Packing packing = maximal_d_packing(g, d);
    if (packing.members.size() > k) {
        packing.members.resize(k);
    } else if (packing.members.size() < k) {
        packing.truncated = true;
    }
    return packing;
}

}  // namespace packmeasure
