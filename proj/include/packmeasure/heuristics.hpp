#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "packmeasure/graph.hpp"
#include "packmeasure/packing.hpp"
#include "packmeasure/parallel.hpp"
#include "packmeasure/rng.hpp"

namespace packmeasure {

enum class SeedMethod { random, mdh, dih, mdh_pack, dih_pack };

inline std::string to_string(SeedMethod m) {
    switch (m) {
        case SeedMethod::random: return "random";
        case SeedMethod::mdh: return "mdh";
        case SeedMethod::dih: return "dih";
        case SeedMethod::mdh_pack: return "mdh-pack";
        case SeedMethod::dih_pack: return "dih-pack";
    }
    return "?";
}

inline SeedMethod seed_method_from_string(const std::string& s) {
    if (s == "random") return SeedMethod::random;
    if (s == "mdh") return SeedMethod::mdh;
    if (s == "dih") return SeedMethod::dih;
    if (s == "mdh-pack") return SeedMethod::mdh_pack;
    if (s == "dih-pack") return SeedMethod::dih_pack;
    throw std::invalid_argument("unknown seed method '" + s + "'");
}

struct SeedSet {
    SeedMethod method;
    std::size_t k = 0;
    std::optional<unsigned> d;  // pack variants only
    std::vector<VertexId> members;
    bool truncated = false;
    bool degraded = false;
};

// Influence(v) = sum over shells of |N_i(v)| / 2^i. Unreachable vertices
// contribute nothing; the sum is strictly below (component size - 1).
inline double diminishing_influence(const Graph& g, VertexId v) {
    DistanceField field = bfs_distances(g, v);
    double score = 0.0;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        VertexId dist = field.dist[u];
        if (dist == kUnreachable || dist == 0) continue;
        if (dist >= 1024) continue;  // 1/2^d underflowed long before this
        score += std::ldexp(1.0, -static_cast<int>(dist));
    }
    return score;
}

// One BFS per vertex, parallel across vertices; slot-per-vertex output keeps
// the result identical for any worker count.
inline std::vector<double> diminishing_influence_all(const Graph& g) {
    std::vector<double> scores(g.vertex_count(), 0.0);
    parallel_for(g.vertex_count(), [&](std::size_t v) {
        scores[v] = diminishing_influence(g, static_cast<VertexId>(v));
    });
    return scores;
}

namespace detail {

// indices 0..n-1 ordered by key descending, ties by lowest index
inline std::vector<VertexId> order_by_score_desc(std::size_t n, auto&& key) {
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return key(a) > key(b); });
    return order;
}

}  // namespace detail

inline SeedSet mdh_seeds(const Graph& g, std::size_t k) {
    if (k < 1 || k > g.vertex_count()) throw std::invalid_argument("k out of range");
    auto order = detail::order_by_score_desc(g.vertex_count(), [&](VertexId v) { return g.degree(v); });
    order.resize(k);
    return SeedSet{SeedMethod::mdh, k, std::nullopt, std::move(order)};
}

// Top-k by diminishing influence, descending, ties by lowest index.
inline SeedSet dih_seeds(const Graph& g, std::size_t k) {
    if (k < 1 || k > g.vertex_count()) throw std::invalid_argument("k out of range");
    std::vector<double> scores = diminishing_influence_all(g);
    auto order = detail::order_by_score_desc(g.vertex_count(), [&](VertexId v) { return scores[v]; });
    order.resize(k);
    return SeedSet{SeedMethod::dih, k, std::nullopt, std::move(order)};
}

// k distinct vertices, uniform without replacement (partial Fisher-Yates).
inline SeedSet random_seeds(const Graph& g, std::size_t k, std::uint64_t rng_seed) {
    std::size_t n = g.vertex_count();
    if (k < 1 || k > n) throw std::invalid_argument("k out of range");
    std::vector<VertexId> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    SplitMix64 rng(rng_seed);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.next_below(n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return SeedSet{SeedMethod::random, k, std::nullopt, std::move(pool)};
}

enum class Measure { degree, diminishing_influence };

inline Measure measure_from_string(const std::string& s) {
    if (s == "degree") return Measure::degree;
    if (s == "diminishing-influence" || s == "dih") return Measure::diminishing_influence;
    throw std::invalid_argument("unknown measure '" + s + "'");
}

// Pack stage then measure stage: take a k-limited d-packing and replace each
// packing element by the highest-measure vertex in its closed neighborhood
// (ties prefer the element itself, then lowest index). If the packing cannot
// supply k seeds, pad first with high-measure vertices still at distance > d
// from all current seeds, then by measure alone with the degraded flag.
inline SeedSet pack_and_measure_seeds(const Graph& g, std::size_t k, unsigned d, Measure measure,
                                      bool refine = true) {
    std::size_t n = g.vertex_count();
    if (k < 1 || k > n) throw std::invalid_argument("k out of range");

    // lazy per-vertex scores; degree reads straight off the adjacency
    std::vector<double> score_cache;
    std::vector<bool> score_known;
    bool all_scored = false;
    auto score_of = [&](VertexId v) -> double {
        if (measure == Measure::degree) return static_cast<double>(g.degree(v));
        if (score_cache.empty()) {
            score_cache.assign(n, 0.0);
            score_known.assign(n, false);
        }
        if (!score_known[v]) {
            score_cache[v] = diminishing_influence(g, v);
            score_known[v] = true;
        }
        return score_cache[v];
    };
    auto score_all = [&] {
        if (measure == Measure::degree || all_scored) return;
        score_cache = diminishing_influence_all(g);
        score_known.assign(n, true);
        all_scored = true;
    };

    Packing packing = k_d_packing(g, k, d);
    SeedSet seeds{measure == Measure::degree ? SeedMethod::mdh_pack : SeedMethod::dih_pack, k, d, {}};
    seeds.truncated = packing.truncated;

    std::vector<bool> chosen(n, false);
    auto push = [&](VertexId v) {
        if (!chosen[v]) {
            chosen[v] = true;
            seeds.members.push_back(v);
        }
    };

    for (VertexId u : packing.members) {
        VertexId best = u;
        if (refine) {
            double best_score = score_of(u);
            for (VertexId w : g.neighbors(u)) {
                double s = score_of(w);
                if (s > best_score || (s == best_score && w < best && best != u)) {
                    best = w;
                    best_score = s;
                }
            }
        }
        push(best);
    }

    // padding: scatter-respecting first
    while (seeds.members.size() < k) {
        score_all();
        std::vector<VertexId> dist = multi_source_distances(g, seeds.members);
        VertexId best = kUnreachable;
        double best_score = -1.0;
        for (VertexId v = 0; v < n; ++v) {
            if (chosen[v] || (dist[v] != kUnreachable && dist[v] <= d)) continue;
            double s = score_of(v);
            if (s > best_score) {
                best = v;
                best_score = s;
            }
        }
        if (best == kUnreachable) break;
        push(best);
    }

    // last resort: by measure alone
    if (seeds.members.size() < k) {
        seeds.degraded = true;
        score_all();
        auto order = detail::order_by_score_desc(n, [&](VertexId v) { return score_of(v); });
        for (VertexId v : order) {
            if (seeds.members.size() == k) break;
            push(v);
        }
    }
    return seeds;
}

}  // namespace packmeasure
