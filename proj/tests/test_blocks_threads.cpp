#include <doctest.h>

#include <set>

#include "oddlab/blocks.hpp"
#include "oddlab/threads.hpp"
#include "test_util.hpp"

using namespace oddlab;

TEST_CASE("C5 is a single block with no cut vertex") {
    auto bd = blocks(test::c5());
    REQUIRE(bd.blocks.size() == 1);
    CHECK(bd.blocks[0] == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(bd.cut_vertices.empty());
}

TEST_CASE("two 5-cycles sharing one vertex") {
    Graph g = gen_ht({0});
    auto bd = blocks(g);
    CHECK(bd.blocks.size() == 2);
    CHECK(bd.cut_vertices == std::vector<int>{0});
}

TEST_CASE("path on 3 vertices has two bridge blocks") {
    auto bd = blocks(test::path(3));
    REQUIRE(bd.blocks.size() == 2);
    CHECK(bd.blocks[0] == std::vector<int>{0, 1});
    CHECK(bd.blocks[1] == std::vector<int>{1, 2});
    CHECK(bd.cut_vertices == std::vector<int>{1});
}

TEST_CASE("blocks partition the edges") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = test::random_graph(9, seed);
        auto bd = blocks(g);
        for (auto [u, v] : g.edges()) {
            int owners = 0;
            for (const auto& b : bd.blocks)
                if (std::binary_search(b.begin(), b.end(), u) &&
                    std::binary_search(b.begin(), b.end(), v))
                    ++owners;
            CHECK(owners == 1);
        }
    }
}

TEST_CASE("end blocks") {
    Graph g = gen_ht({0, 0});  // three 5-cycles glued at vertex 0
    auto bd = blocks(g);
    CHECK(end_blocks(g, bd).size() == 3);
    CHECK(block_is_cycle(g, bd.blocks[0], 5));
}

TEST_CASE("SK4 threads: six 1-threads") {
    Graph g = gen_sk(4);
    auto td = threads(g);
    CHECK(td.threads().size() == 6);
    for (const auto& t : td.threads()) {
        CHECK(t.length() == 1);
        CHECK(t.front_anchor.has_value());
        CHECK(t.back_anchor.has_value());
        CHECK(!t.cyclic);
    }
}

TEST_CASE("a 2-thread between two 3+ anchors") {
    // a-x-y-b with extra pendants raising a, b to degree 3.
    Graph g = from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}, {3, 6}, {3, 7}});
    auto td = threads(g);
    REQUIRE(td.threads().size() == 1);
    const Thread& t = td.threads()[0];
    CHECK(t.vertices == std::vector<int>{1, 2});
    CHECK(t.front_anchor.value() + t.back_anchor.value() == 3);  // anchors {0, 3}
    CHECK(td.adjacent_to_thread(0, 2));
    CHECK(!td.adjacent_to_thread(0, 3));
}

TEST_CASE("a standalone cycle is one cyclic thread") {
    auto td = threads(test::c5());
    REQUIRE(td.threads().size() == 1);
    CHECK(td.threads()[0].cyclic);
    CHECK(td.threads()[0].length() == 5);
    CHECK(!td.threads()[0].front_anchor.has_value());
    CHECK(max_thread_length(td) == 5);
}

TEST_CASE("every 2-vertex lies in exactly one thread") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = test::random_graph(10, seed);
        auto td = threads(g);
        std::set<int> covered;
        for (const auto& t : td.threads())
            for (int v : t.vertices) {
                CHECK(g.degree(v) == 2);
                CHECK(covered.insert(v).second);
            }
        for (int v = 0; v < g.n(); ++v)
            if (g.degree(v) == 2) CHECK(covered.count(v) == 1);
    }
}
