#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "packmeasure/packing.hpp"
#include "test_util.hpp"

using namespace packmeasure;
using pmtest::random_graph;

namespace {

void verify_packing_property(const Graph& g, const Packing& p) {
    for (std::size_t i = 0; i < p.members.size(); ++i) {
        DistanceField f = bfs_distances(g, p.members[i]);
        for (std::size_t j = i + 1; j < p.members.size(); ++j) {
            VertexId dist = f.dist[p.members[j]];
            INFO("members " << p.members[i] << " and " << p.members[j] << " at distance " << dist);
            REQUIRE((dist == kUnreachable || dist > p.d));
        }
    }
}

void verify_maximality(const Graph& g, const Packing& p) {
    std::vector<VertexId> dist = multi_source_distances(g, p.members);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        REQUIRE(dist[v] != kUnreachable);
        REQUIRE(dist[v] <= p.d);
    }
}

}  // namespace

TEST_CASE("maximal 2-packing on P5") {
    Graph g = pmtest::make_path(5);
    Packing p = maximal_d_packing(g, 2);
    REQUIRE(p.members == std::vector<VertexId>{1, 4});
}

TEST_CASE("maximal 1-packing on K5 has one member") {
    Graph g = pmtest::make_clique(5);
    Packing p = maximal_d_packing(g, 1);
    REQUIRE(p.members.size() == 1);
}

TEST_CASE("0-packing is all vertices in degree order") {
    Graph g = pmtest::make_star(3);
    Packing p = maximal_d_packing(g, 0);
    REQUIRE(p.members == std::vector<VertexId>{0, 1, 2, 3});

    Graph empty;
    REQUIRE(maximal_d_packing(empty, 2).members.empty());
}

TEST_CASE("k_d_packing truncates to a prefix") {
    Graph p5 = pmtest::make_path(5);
    Packing p = k_d_packing(p5, 1, 2);
    REQUIRE(p.members == std::vector<VertexId>{1});
    REQUIRE_FALSE(p.truncated);

    Packing clipped = k_d_packing(pmtest::make_clique(5), 3, 1);
    REQUIRE(clipped.members.size() == 1);
    REQUIRE(clipped.truncated);

    Graph g = random_graph(12, 0.3, 1);
    Packing all = k_d_packing(g, 100, 0);
    REQUIRE(all.members.size() == g.vertex_count());
}

TEST_CASE("packing properties on random graphs") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Graph g = random_graph(25, 0.12, 400 + seed);
        for (unsigned d : {0u, 1u, 2u, 3u}) {
            Packing p = maximal_d_packing(g, d);
            verify_packing_property(g, p);
            verify_maximality(g, p);
            if (!p.members.empty()) {
                // greedy dominance: first member has maximum degree
                std::size_t max_deg = 0;
                for (VertexId v = 0; v < g.vertex_count(); ++v)
                    max_deg = std::max(max_deg, g.degree(v));
                REQUIRE(g.degree(p.members[0]) == max_deg);
            }
            // determinism
            Packing again = maximal_d_packing(g, d);
            REQUIRE(again.members == p.members);
        }
    }
}

TEST_CASE("greedy continues across disconnected components") {
    // two disjoint triangles
    Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    Packing p = maximal_d_packing(g, 2);
    REQUIRE(p.members.size() == 2);
    verify_packing_property(g, p);
    verify_maximality(g, p);
}
