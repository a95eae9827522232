#include <doctest.h>

#include "lemma_instances.hpp"
#include "oddlab/extension.hpp"

using namespace oddlab;
using namespace oddlab::test;

TEST_CASE("extension preconditions are enforced") {
    Graph g = gen_sk(4);  // branch 0..3 (degree 3), subdivision 4..9 (degree 2)
    PartialColoring empty(g.n(), 5);
    // A 3-vertex with exactly one 2-neighbor has residue 5, too large for c = 5.
    Graph h2 = from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 6}});
    CHECK(deg_stats(h2, 0).n2 == 1);
    CHECK(lemma_bound(h2, 0, LemmaKind::Pcf) == 5);
    PartialColoring phi2(h2.n(), 5);
    CHECK_THROWS_AS(extend_lemma_semi_pcf(h2, 0, phi2, 5), std::invalid_argument);

    CHECK_THROWS_AS(extend_lemma_semi_pcf(g, 0, empty, 4), std::invalid_argument);
    PartialColoring phi6(g.n(), 6);
    CHECK_THROWS_AS(extend_lemma_semi_pcf_deg3(g, 0, phi6, 6), std::invalid_argument);

    // Odd lemma: even degree and no 2--neighbor.
    Graph k5 = from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                              {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    PartialColoring phi5(5, 5);
    CHECK_THROWS_AS(extend_lemma_semi_odd(k5, 0, phi5, 5), std::invalid_argument);
}

TEST_CASE("semi-PCF extension emits PCF colorings on admissible instances") {
    auto instances = make_instances(Lemma::SemiPcf, 25, 1);
    for (const auto& inst : instances) {
        auto out = extend_lemma_semi_pcf(inst.g, inst.v, inst.phi, inst.c);
        CHECK(verify(inst.g, out, VerdictKind::Pcf).ok);
        // Colors of G - Y are untouched.
        for (int w = 0; w < inst.g.n(); ++w)
            if (inst.phi.colored(w)) CHECK(out.color(w) == inst.phi.color(w));
    }
}

TEST_CASE("deg-3 semi-PCF extension (c in {7, 8})") {
    auto instances = make_instances(Lemma::SemiPcfDeg3, 15, 77);
    for (const auto& inst : instances) {
        auto out = extend_lemma_semi_pcf_deg3(inst.g, inst.v, inst.phi, inst.c);
        CHECK(verify(inst.g, out, VerdictKind::Pcf).ok);
    }
}

TEST_CASE("semi-odd extension emits odd colorings, repairs included") {
    auto instances = make_instances(Lemma::SemiOdd, 25, 202);
    for (const auto& inst : instances) {
        auto out = extend_lemma_semi_odd(inst.g, inst.v, inst.phi, inst.c);
        CHECK(verify(inst.g, out, VerdictKind::Odd).ok);
    }
}

TEST_CASE("coloring subdivided regular multigraphs") {
    SUBCASE("two vertices, five parallel edges: PCF 5-coloring of K_{2,5}") {
        Multigraph g0(2, std::vector<std::pair<int, int>>(5, {0, 1}));
        auto out = color_subdivided(g0, 5, Mode::Pcf);
        CHECK(out.graph.n() == 7);
        CHECK(verify(out.graph, out.coloring, VerdictKind::Pcf).ok);
    }
    SUBCASE("K6 rejected at c = 5") {
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) es.emplace_back(i, j);
        Multigraph k6(6, es);
        CHECK_THROWS_AS(color_subdivided(k6, 5, Mode::Pcf), std::invalid_argument);
    }
    SUBCASE("random 6-regular multigraphs, odd mode") {
        for (uint64_t seed : {1, 2, 3}) {
            Multigraph g0 = gen_random_regular_multigraph(4, 6, seed);
            if (!g0.connected()) continue;
            auto out = color_subdivided(g0, 6, Mode::Odd);
            CHECK(verify(out.graph, out.coloring, VerdictKind::Odd).ok);
        }
    }
    SUBCASE("6-regular bipartite multigraph, odd mode") {
        // K_{3,3} with every edge doubled.
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < 3; ++i)
            for (int j = 3; j < 6; ++j) {
                es.emplace_back(i, j);
                es.emplace_back(i, j);
            }
        Multigraph g0(6, es);
        REQUIRE(g0.regular(6));
        auto out = color_subdivided(g0, 6, Mode::Odd);
        CHECK(verify(out.graph, out.coloring, VerdictKind::Odd).ok);
    }
    SUBCASE("random 5-regular multigraphs, both modes") {
        for (uint64_t seed : {4, 5, 6}) {
            Multigraph g0 = gen_random_regular_multigraph(4, 5, seed);
            if (!g0.connected()) continue;
            CHECK(verify(color_subdivided(g0, 5, Mode::Pcf).graph,
                         color_subdivided(g0, 5, Mode::Pcf).coloring, VerdictKind::Pcf)
                      .ok);
            auto odd = color_subdivided(g0, 5, Mode::Odd);
            CHECK(verify(odd.graph, odd.coloring, VerdictKind::Odd).ok);
        }
    }
}
