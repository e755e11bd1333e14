#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "packmeasure/graph.hpp"
#include "packmeasure/parallel.hpp"
#include "packmeasure/rng.hpp"

namespace packmeasure {

struct DiffusionOutcome {
    std::size_t activated = 0;
    std::size_t rounds = 0;  // 0 iff nothing outside the seed set activated
    std::vector<bool> activated_set;
};

// One Independent Cascade run, level-synchronous: seeds are round 0; each
// vertex activated in round r flips an independent coin per inactive
// neighbor in round r+1 and never attempts the same neighbor again.
inline DiffusionOutcome ic_simulate(const Graph& g, std::span<const VertexId> seeds, double p,
                                    std::uint64_t stream_seed) {
    if (seeds.empty()) throw std::invalid_argument("seed set must be non-empty");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0,1]");
    std::size_t n = g.vertex_count();

    DiffusionOutcome out;
    out.activated_set.assign(n, false);
    std::vector<VertexId> frontier;
    for (VertexId s : seeds) {
        g.check_vertex(s);
        if (!out.activated_set[s]) {
            out.activated_set[s] = true;
            frontier.push_back(s);
            ++out.activated;
        }
    }

    SplitMix64 rng(derive_stream_seed(stream_seed, 0));
    std::vector<VertexId> next;
    while (!frontier.empty()) {
        next.clear();
        for (VertexId u : frontier) {
            for (VertexId w : g.neighbors(u)) {
                if (out.activated_set[w]) continue;
                if (rng.next_unit() < p) {
                    out.activated_set[w] = true;
                    next.push_back(w);
                }
            }
        }
        if (next.empty()) break;
        ++out.rounds;
        out.activated += next.size();
        frontier.swap(next);
    }
    return out;
}

struct SpreadEstimate {
    double mean_activated = 0.0;
    double mean_rounds = 0.0;
    std::size_t iterations = 0;
    std::uint64_t master_seed = 0;
    long long rounded_activated = 0;  // half-up
};

// Monte-Carlo spread: iteration i runs ic_simulate with a stream seed derived
// from (master_seed, i). Integer accumulation makes the reduction
// order-insensitive, so the estimate is identical for any worker count.
inline SpreadEstimate estimate_spread(const Graph& g, std::span<const VertexId> seeds, double p,
                                      std::size_t iterations, std::uint64_t master_seed) {
    if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
    std::size_t workers = worker_count();
    if (workers > iterations) workers = iterations;
    std::vector<std::uint64_t> activated_sum(workers, 0), rounds_sum(workers, 0);

    std::size_t chunk = (iterations + workers - 1) / workers;
    parallel_for(workers, [&](std::size_t w) {
        std::size_t lo = w * chunk;
        std::size_t hi = lo + chunk < iterations ? lo + chunk : iterations;
        for (std::size_t i = lo; i < hi; ++i) {
            DiffusionOutcome o = ic_simulate(g, seeds, p, derive_stream_seed(master_seed, i));
            activated_sum[w] += o.activated;
            rounds_sum[w] += o.rounds;
        }
    });

    std::uint64_t total_activated = 0, total_rounds = 0;
    for (std::size_t w = 0; w < workers; ++w) {
        total_activated += activated_sum[w];
        total_rounds += rounds_sum[w];
    }
    SpreadEstimate est;
    est.iterations = iterations;
    est.master_seed = master_seed;
    est.mean_activated = static_cast<double>(total_activated) / static_cast<double>(iterations);
    est.mean_rounds = static_cast<double>(total_rounds) / static_cast<double>(iterations);
    est.rounded_activated = static_cast<long long>(std::floor(est.mean_activated + 0.5));
    return est;
}

struct CoverageResult {
    std::size_t steps = 0;        // max distance of a reachable vertex to its nearest seed
    std::size_t unreachable = 0;  // vertices no seed can reach, excluded from steps
};

// Speed of propagation at p=1: the round in which the last reachable vertex
// activates equals the largest distance to the nearest seed.
inline CoverageResult coverage_steps(const Graph& g, std::span<const VertexId> seeds) {
    if (seeds.empty()) throw std::invalid_argument("seed set must be non-empty");
    std::vector<VertexId> dist = multi_source_distances(g, seeds);
    CoverageResult res;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (dist[v] == kUnreachable) {
            ++res.unreachable;
        } else if (dist[v] > res.steps) {
            res.steps = dist[v];
        }
    }
    return res;
}

// Fraction of all n vertices within distance d of the seed set.
inline double firehouse_coverage(const Graph& g, std::span<const VertexId> seeds, unsigned d) {
    if (seeds.empty()) throw std::invalid_argument("seed set must be non-empty");
    std::vector<VertexId> dist = multi_source_distances(g, seeds);
    std::size_t covered = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (dist[v] != kUnreachable && dist[v] <= d) ++covered;
    return static_cast<double>(covered) / static_cast<double>(g.vertex_count());
}

inline bool firehouse_decide(const Graph& g, std::span<const VertexId> seeds, unsigned d, double t) {
    if (t <= 0.0 || t > 1.0) throw std::invalid_argument("t must be in (0,1]");
    return firehouse_coverage(g, seeds, d) >= t;
}

}  // namespace packmeasure
