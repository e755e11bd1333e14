#include <catch2/catch_amalgamated.hpp>

#include "packmeasure/synthgen.hpp"
#include "test_util.hpp"

using namespace packmeasure;

TEST_CASE("clique ring counts match the closed forms") {
    SyntheticSpec four{{4, 4, 4, 4}, 1, 0};
    Graph g = generate_scattered_cliques(four);
    REQUIRE(g.vertex_count() == 20);
    REQUIRE(g.edge_count() == 32);
    REQUIRE(four.expected_vertices() == 20);
    REQUIRE(four.expected_edges() == 32);

    SyntheticSpec tri{{3, 3, 3}, 0, 0};
    Graph h = generate_scattered_cliques(tri);
    REQUIRE(h.vertex_count() == 9);
    REQUIRE(h.edge_count() == 12);
}

TEST_CASE("the bundled four-community spec hits its target totals") {
    SyntheticSpec spec = paper4_spec();
    REQUIRE(spec.expected_vertices() == 1586);
    REQUIRE(spec.expected_edges() == 318015);
    Graph g = generate_scattered_cliques(spec);
    REQUIRE(g.vertex_count() == 1586);
    REQUIRE(g.edge_count() == 318015);
}

TEST_CASE("generated graphs are connected") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        SyntheticSpec spec{{5, 4, 6}, 2, seed};
        Graph g = generate_scattered_cliques(spec);
        DistanceField f = bfs_distances(g, 0);
        for (VertexId d : f.dist) REQUIRE(d != kUnreachable);
    }
}

TEST_CASE("adjacent cliques sit at port distance L+1") {
    SyntheticSpec spec{{4, 4, 4, 4}, 3, 11};
    Graph g = generate_scattered_cliques(spec);
    // vertices 0..3 are clique 0, 4..7 clique 1; the shortest route between
    // them is port-path-port of length L+1
    VertexId min_dist = kUnreachable;
    for (VertexId a = 0; a < 4; ++a) {
        DistanceField f = bfs_distances(g, a);
        for (VertexId b = 4; b < 8; ++b) min_dist = std::min(min_dist, f.dist[b]);
    }
    REQUIRE(min_dist == 4);
}

TEST_CASE("spec validation") {
    REQUIRE_THROWS_AS(generate_scattered_cliques(SyntheticSpec{{4, 4}, 1, 0}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(generate_scattered_cliques(SyntheticSpec{{4, 1, 4}, 1, 0}),
                      std::invalid_argument);
}

TEST_CASE("port choice is deterministic per rng seed") {
    SyntheticSpec spec{{6, 5, 4}, 2, 123};
    Graph a = generate_scattered_cliques(spec);
    Graph b = generate_scattered_cliques(spec);
    for (VertexId v = 0; v < a.vertex_count(); ++v) {
        auto na = a.neighbors(v);
        auto nb = b.neighbors(v);
        REQUIRE(std::vector<VertexId>(na.begin(), na.end()) ==
                std::vector<VertexId>(nb.begin(), nb.end()));
    }
}
