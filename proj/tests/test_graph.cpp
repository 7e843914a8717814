#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "recon/errors.hpp"
#include "recon/graph.hpp"

using namespace recon;

namespace {

Graph two_k2() { return Graph(4, {{0, 1}, {2, 3}}); }

}  // namespace

TEST_CASE("adjacency is symmetric and loop-free") {
    Graph g(5);
    g.add_edge(0, 3);
    CHECK(g.adjacent(3, 0));
    CHECK_FALSE(g.adjacent(0, 0));
    CHECK(g.size() == 1);
    g.remove_edge(3, 0);
    CHECK(g.size() == 0);
}

TEST_CASE("distance matrix") {
    const DistanceMatrix p3 = distance_matrix(path_graph(3));
    CHECK(p3(0, 2) == 2);
    for (Vertex v = 0; v < 3; ++v) CHECK(p3(v, v) == 0);
    CHECK(distance_matrix(two_k2())(0, 2) == kInfinity);
}

TEST_CASE("distance matrix agrees with Floyd-Warshall") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = oracle::random_graph(2 + trial % 10, 0.3, rng);
        const DistanceMatrix d = distance_matrix(g);
        const auto ref = oracle::floyd_warshall(g);
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v) {
                const int expected = ref[u][v] >= oracle::kUnreachable ? kInfinity : ref[u][v];
                REQUIRE(d(u, v) == expected);
            }
    }
}

TEST_CASE("diameter") {
    CHECK(diameter(cycle_graph(4)) == 2);
    CHECK(diameter(path_graph(4)) == 3);
    CHECK(diameter(petersen_graph()) == 2);
    CHECK(diameter(two_k2()) == kInfinity);
}

TEST_CASE("diameter is infinite exactly for disconnected graphs") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : oracle::all_labeled(n)) REQUIRE((diameter(g) == kInfinity) == !is_connected(g));
}

TEST_CASE("vertex connectivity examples") {
    CHECK(vertex_connectivity(complete_bipartite(3, 3)) == 3);
    CHECK(vertex_connectivity(cycle_graph(5)) == 2);
    CHECK(vertex_connectivity(petersen_graph()) == 3);
    CHECK(vertex_connectivity(complete_graph(5)) == 4);
    CHECK_THROWS_AS(vertex_connectivity(two_k2()), Error);
}

TEST_CASE("subset and flow connectivity agree with the brute-force count") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : oracle::all_unlabeled(n)) {
            if (!is_connected(g)) continue;
            const int expected = oracle::connectivity(g);
            REQUIRE(vertex_connectivity_by_subsets(g) == expected);
            REQUIRE(vertex_connectivity_by_flow(g) == expected);
        }
    }
    std::mt19937 rng(11);
    int checked = 0;
    while (checked < 1000) {
        const Graph g = oracle::random_graph(7 + checked % 6, 0.45, rng);
        if (!is_connected(g)) continue;
        REQUIRE(vertex_connectivity_by_subsets(g) == vertex_connectivity_by_flow(g));
        ++checked;
    }
}

TEST_CASE("complement") {
    const Graph c5 = cycle_graph(5);
    CHECK(complement(complement(c5)) == c5);
    CHECK(oracle::isomorphic(complement(c5), c5));
    CHECK(oracle::isomorphic(complement(path_graph(4)), path_graph(4)));
    for (const Graph& g : oracle::all_labeled(5)) REQUIRE(complement(complement(g)) == g);
}

TEST_CASE("triangle-free") {
    CHECK(is_triangle_free(petersen_graph()));
    CHECK(is_triangle_free(complete_bipartite(3, 3)));
    CHECK_FALSE(is_triangle_free(cycle_graph(3)));
    for (const Graph& g : oracle::all_labeled(5)) REQUIRE(is_triangle_free(g) == oracle::triangle_free(g));
}

TEST_CASE("bipartition") {
    const auto c4 = bipartition(cycle_graph(4));
    REQUIRE(c4);
    CHECK(c4->first == VertexSet{0, 2});
    CHECK(c4->second == VertexSet{1, 3});
    CHECK_FALSE(bipartition(cycle_graph(5)));
    const auto p4 = bipartition(path_graph(4));
    REQUIRE(p4);
    CHECK(p4->first == VertexSet{0, 2});
    CHECK(p4->second == VertexSet{1, 3});
}

TEST_CASE("bipartition parts cover the graph with no inner edges") {
    for (const Graph& g : oracle::all_labeled(6)) {
        const auto parts = bipartition(g);
        if (!parts) continue;
        REQUIRE((parts->first | parts->second) == g.vertices());
        REQUIRE_FALSE(parts->first.intersects(parts->second));
        REQUIRE(is_independent(g, parts->first));
        REQUIRE(is_independent(g, parts->second));
    }
}

TEST_CASE("invariants survive relabeling") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracle::random_graph(3 + trial % 8, 0.4, rng);
        const Graph h = oracle::shuffled(g, rng);
        REQUIRE(diameter(g) == diameter(h));
        REQUIRE(is_triangle_free(g) == is_triangle_free(h));
        REQUIRE(is_bipartite(g) == is_bipartite(h));
        if (is_connected(g)) REQUIRE(vertex_connectivity(g) == vertex_connectivity(h));
    }
}

TEST_CASE("deleting vertices and edges") {
    const Graph p3 = path_graph(3);
    const Graph mid = delete_vertex(p3, 1);
    CHECK(mid.order() == 2);
    CHECK(mid.size() == 0);
    CHECK(oracle::isomorphic(delete_edge(cycle_graph(4), 1, 2), path_graph(4)));
    CHECK(oracle::isomorphic(delete_vertex(cycle_graph(5), 3), path_graph(4)));
    CHECK(delete_vertex(path_graph(4), 1) == Graph(3, {{1, 2}}));
    CHECK_THROWS_AS(delete_vertex(p3, 3), Error);
    CHECK_THROWS_AS(delete_edge(p3, 0, 2), Error);
}

TEST_CASE("G2 and G3 membership") {
    CHECK(in_g2(petersen_graph()));
    CHECK_FALSE(in_g3(petersen_graph()));
    CHECK(in_g3(path_graph(4)));
    CHECK(in_g2(cycle_graph(5)));
    CHECK(in_g2(complete_bipartite(3, 3)));
}
