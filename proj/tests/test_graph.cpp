#include <doctest.h>

#include "oddlab/graph.hpp"
#include "test_util.hpp"

using namespace oddlab;

TEST_CASE("from_edges builds C5") {
    Graph g = from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(g.n() == 5);
    CHECK(g.m() == 5);
    for (int v = 0; v < 5; ++v) CHECK(g.degree(v) == 2);
    CHECK(g.has_edge(4, 0));
    CHECK(!g.has_edge(0, 2));
}

TEST_CASE("from_edges accepts a single isolated vertex") {
    Graph g = from_edges(1, {});
    CHECK(g.n() == 1);
    CHECK(g.degree(0) == 0);
}

TEST_CASE("from_edges rejects bad input") {
    CHECK_THROWS_AS(from_edges(3, {{0, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(from_edges(3, {{1, 0}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(from_edges(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(from_edges(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("degree sum equals twice the edge count on random graphs") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = test::random_graph(3 + (int)(seed % 10), seed);
        CHECK(degree_sum(g) == 2LL * g.m());
    }
}

TEST_CASE("induced subgraph") {
    Graph g = test::k4();
    auto [h, ids] = g.induced({0, 2, 3});
    CHECK(h.n() == 3);
    CHECK(h.m() == 3);
    CHECK(ids == std::vector<int>{0, 2, 3});
}

TEST_CASE("components") {
    Graph g = from_edges(5, {{0, 1}, {2, 3}});
    auto comps = components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(!is_connected(g));
    CHECK(is_connected(test::c5()));
}

TEST_CASE("multigraph keeps parallels and rejects loops") {
    Multigraph m(2, {{0, 1}, {0, 1}, {1, 0}});
    CHECK(m.m() == 3);
    CHECK(m.degree(0) == 3);
    CHECK(m.regular(3));
    CHECK(m.simplify().m() == 1);
    CHECK_THROWS_AS(Multigraph(2, {{1, 1}}), std::invalid_argument);
}
