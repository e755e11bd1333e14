#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "packmeasure/graph.hpp"
#include "packmeasure/rng.hpp"

namespace packmeasure {

// Ring of cliques joined by paths: clique i connects to clique (i+1) mod c
// through a path with `path_internal_vertices` fresh internal vertices, so
// n = sum(sizes) + c*L and m = sum(C(size,2)) + c*(L+1).
struct SyntheticSpec {
    std::vector<std::size_t> clique_sizes;
    std::size_t path_internal_vertices = 0;
    std::uint64_t rng_seed = 0;  // port-vertex choice only

    void validate() const {
        if (clique_sizes.size() < 3) throw std::invalid_argument("ring needs at least 3 cliques");
        for (std::size_t s : clique_sizes)
            if (s < 2) throw std::invalid_argument("clique sizes must be >= 2");
    }

    std::size_t expected_vertices() const {
        std::size_t n = clique_sizes.size() * path_internal_vertices;
        for (std::size_t s : clique_sizes) n += s;
        return n;
    }

    std::size_t expected_edges() const {
        std::size_t m = clique_sizes.size() * (path_internal_vertices + 1);
        for (std::size_t s : clique_sizes) m += s * (s - 1) / 2;
        return m;
    }
};

// Reconstructed four-community benchmark instance: clique sizes
// 500/450/350/250 with 9 internal path vertices give 1586 vertices and
// 318015 edges. Only the totals are known; the sizes are the round-number
// solution of the count equations, not ground truth.
inline SyntheticSpec paper4_spec() {
    return SyntheticSpec{{500, 450, 350, 250}, 9, 0};
}

inline Graph generate_scattered_cliques(const SyntheticSpec& spec) {
    spec.validate();
    std::size_t c = spec.clique_sizes.size();
    std::size_t L = spec.path_internal_vertices;

    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<VertexId> clique_start(c);
    VertexId next = 0;
    for (std::size_t i = 0; i < c; ++i) {
        clique_start[i] = next;
        VertexId s = static_cast<VertexId>(spec.clique_sizes[i]);
        for (VertexId a = 0; a < s; ++a)
            for (VertexId b = a + 1; b < s; ++b) edges.emplace_back(next + a, next + b);
        next += s;
    }

    SplitMix64 rng(spec.rng_seed);
    for (std::size_t i = 0; i < c; ++i) {
        std::size_t j = (i + 1) % c;
        VertexId port_a = clique_start[i] + static_cast<VertexId>(rng.next_below(spec.clique_sizes[i]));
        VertexId port_b = clique_start[j] + static_cast<VertexId>(rng.next_below(spec.clique_sizes[j]));
        VertexId prev = port_a;
        for (std::size_t h = 0; h < L; ++h) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, port_b);
    }
    return Graph::from_edges(next, std::move(edges));
}

}  // namespace packmeasure
