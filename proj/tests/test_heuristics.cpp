#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "packmeasure/heuristics.hpp"
#include "test_util.hpp"

using namespace packmeasure;
using pmtest::floyd_warshall;
using pmtest::influence_oracle;
using pmtest::random_graph;

TEST_CASE("diminishing influence on small fixtures") {
    Graph p3 = pmtest::make_path(3);
    REQUIRE(diminishing_influence(p3, 1) == Catch::Approx(1.0));
    REQUIRE(diminishing_influence(p3, 0) == Catch::Approx(0.75));

    Graph star = pmtest::make_star(4);
    REQUIRE(diminishing_influence(star, 0) == Catch::Approx(2.0));
    REQUIRE(diminishing_influence(star, 1) == Catch::Approx(1.25));

    REQUIRE_THROWS_AS(diminishing_influence(p3, 7), std::out_of_range);
}

TEST_CASE("diminishing_influence_all on small fixtures") {
    Graph k3 = pmtest::make_clique(3);
    for (double s : diminishing_influence_all(k3)) REQUIRE(s == Catch::Approx(1.0));

    Graph p3 = pmtest::make_path(3);
    auto scores = diminishing_influence_all(p3);
    REQUIRE(scores[0] == Catch::Approx(0.75));
    REQUIRE(scores[1] == Catch::Approx(1.0));
    REQUIRE(scores[2] == Catch::Approx(0.75));

    Graph edgeless = Graph::from_edges(4, {});
    for (double s : diminishing_influence_all(edgeless)) REQUIRE(s == 0.0);
}

TEST_CASE("diminishing influence matches the all-pairs brute force") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = random_graph(20 + 3 * seed, 0.1, 900 + seed);
        auto apsp = floyd_warshall(g);
        auto scores = diminishing_influence_all(g);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            REQUIRE(scores[v] == Catch::Approx(influence_oracle(apsp, v)).margin(1e-9));
        }
    }
}

TEST_CASE("attaching a leaf raises the host's influence by exactly 1/2") {
    Graph g = random_graph(15, 0.2, 5);
    VertexId host = 3;
    double before = diminishing_influence(g, host);

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (VertexId w : g.neighbors(v))
            if (v < w) edges.emplace_back(v, w);
    edges.emplace_back(host, static_cast<VertexId>(g.vertex_count()));
    Graph g2 = Graph::from_edges(g.vertex_count() + 1, std::move(edges));

    REQUIRE(diminishing_influence(g2, host) == Catch::Approx(before + 0.5).margin(1e-12));
}

TEST_CASE("mdh_seeds") {
    Graph star = pmtest::make_star(4);
    REQUIRE(mdh_seeds(star, 1).members == std::vector<VertexId>{0});

    Graph p5 = pmtest::make_path(5);
    REQUIRE(mdh_seeds(p5, 2).members == std::vector<VertexId>{1, 2});

    SeedSet all = mdh_seeds(p5, 5);
    REQUIRE(all.members.size() == 5);

    REQUIRE_THROWS_AS(mdh_seeds(p5, 6), std::invalid_argument);
}

TEST_CASE("mdh_seeds is a degree-sorted prefix") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_graph(30, 0.15, 50 + seed);
        SeedSet seeds = mdh_seeds(g, 7);
        std::set<VertexId> chosen(seeds.members.begin(), seeds.members.end());
        std::size_t min_in = g.vertex_count(), max_out = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (chosen.count(v))
                min_in = std::min(min_in, g.degree(v));
            else
                max_out = std::max(max_out, g.degree(v));
        }
        REQUIRE(min_in >= max_out);
    }
}

TEST_CASE("random_seeds") {
    Graph g = random_graph(12, 0.3, 9);
    SeedSet a = random_seeds(g, 5, 1234);
    SeedSet b = random_seeds(g, 5, 1234);
    REQUIRE(a.members == b.members);
    REQUIRE(std::set<VertexId>(a.members.begin(), a.members.end()).size() == 5);

    SeedSet all = random_seeds(g, g.vertex_count(), 7);
    REQUIRE(std::set<VertexId>(all.members.begin(), all.members.end()).size() == g.vertex_count());

    Graph single = Graph::from_edges(1, {});
    REQUIRE(random_seeds(single, 1, 42).members == std::vector<VertexId>{0});

    REQUIRE_THROWS_AS(random_seeds(g, 13, 0), std::invalid_argument);
}

TEST_CASE("pack_and_measure on P5 with degree measure") {
    Graph g = pmtest::make_path(5);
    SeedSet seeds = pack_and_measure_seeds(g, 2, 2, Measure::degree);
    REQUIRE(seeds.members == std::vector<VertexId>{1, 3});
    REQUIRE_FALSE(seeds.truncated);
    REQUIRE_FALSE(seeds.degraded);
}

TEST_CASE("pack_and_measure on K5 keeps the lowest-index vertex") {
    Graph g = pmtest::make_clique(5);
    SeedSet seeds = pack_and_measure_seeds(g, 1, 1, Measure::degree);
    REQUIRE(seeds.members == std::vector<VertexId>{0});
}

TEST_CASE("pack_and_measure picks one seed per clique on a two-clique dumbbell") {
    // two K4 cliques joined by a 5-edge path (4 internal vertices)
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId a = 0; a < 4; ++a)
        for (VertexId b = a + 1; b < 4; ++b) {
            edges.emplace_back(a, b);
            edges.emplace_back(a + 4, b + 4);
        }
    // path 0 - 8 - 9 - 10 - 11 - 4
    edges.emplace_back(0, 8);
    edges.emplace_back(8, 9);
    edges.emplace_back(9, 10);
    edges.emplace_back(10, 11);
    edges.emplace_back(11, 4);
    Graph g = Graph::from_edges(12, std::move(edges));
    REQUIRE(g.vertex_count() == 12);

    SeedSet seeds = pack_and_measure_seeds(g, 2, 3, Measure::diminishing_influence);
    REQUIRE(seeds.members.size() == 2);
    bool in_first = false, in_second = false;
    for (VertexId v : seeds.members) {
        if (v < 4) in_first = true;
        if (v >= 4 && v < 8) in_second = true;
    }
    REQUIRE(in_first);
    REQUIRE(in_second);

    // brute-force check that clique vertices beat their path neighbors
    auto apsp = floyd_warshall(g);
    for (VertexId clique_v : {0u, 4u})
        REQUIRE(influence_oracle(apsp, clique_v) > influence_oracle(apsp, 9));
}

TEST_CASE("pack_and_measure members stay pairwise further than d-2") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_graph(30, 0.1, 700 + seed);
        for (unsigned d : {2u, 3u, 4u}) {
            for (Measure m : {Measure::degree, Measure::diminishing_influence}) {
                SeedSet seeds = pack_and_measure_seeds(g, 4, d, m);
                REQUIRE(seeds.members.size() == 4);
                if (!seeds.degraded) {
                    for (std::size_t i = 0; i < seeds.members.size(); ++i) {
                        DistanceField f = bfs_distances(g, seeds.members[i]);
                        for (std::size_t j = i + 1; j < seeds.members.size(); ++j) {
                            VertexId dist = f.dist[seeds.members[j]];
                            REQUIRE((dist == kUnreachable || dist + 2 > d));
                        }
                    }
                }
                // determinism
                SeedSet again = pack_and_measure_seeds(g, 4, d, m);
                REQUIRE(again.members == seeds.members);
            }
        }
    }
}

TEST_CASE("pack_and_measure pads when the packing is exhausted") {
    Graph g = pmtest::make_clique(6);
    SeedSet seeds = pack_and_measure_seeds(g, 3, 1, Measure::degree);
    REQUIRE(seeds.members.size() == 3);
    REQUIRE(seeds.truncated);
    REQUIRE(seeds.degraded);  // every vertex is within distance 1 of the first seed
    std::set<VertexId> distinct(seeds.members.begin(), seeds.members.end());
    REQUIRE(distinct.size() == 3);
}

TEST_CASE("no-refine keeps raw packing members") {
    Graph g = pmtest::make_path(5);
    SeedSet seeds = pack_and_measure_seeds(g, 2, 2, Measure::degree, false);
    REQUIRE(seeds.members == std::vector<VertexId>{1, 4});
}
