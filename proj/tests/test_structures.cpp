#include <doctest.h>

#include "oddlab/coloring.hpp"
#include "oddlab/cycles.hpp"
#include "oddlab/structures.hpp"
#include "plane_fixtures.hpp"
#include "test_util.hpp"

using namespace oddlab;

TEST_CASE("degree statistics and easy vertices") {
    Graph g = gen_sk(4);
    DegStats s = deg_stats(g, 0);
    CHECK(s.d == 3);
    CHECK(s.n2 == 3);
    CHECK(s.n1 + s.n3 + s.n4p == 0);
    CHECK(is_easy(g, 0));       // odd degree
    CHECK(!is_easy(g, 4));      // a 2-vertex is never easy
    Graph k5 = from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                              {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(!is_easy(k5, 0));     // even degree, no 2--neighbor
    CHECK(deg_stats(k5, 0).ne == 0);
}

TEST_CASE("lemma_bound residues") {
    // A 3-vertex with one 2-neighbor and two 4+-neighbors.
    Graph g = from_edges(9, {{0, 1}, {0, 2}, {0, 3}, {1, 4},
                             {2, 5}, {2, 6}, {2, 7}, {3, 5}, {3, 6}, {3, 8}});
    REQUIRE(deg_stats(g, 0).n2 == 1);
    CHECK(lemma_bound(g, 0, LemmaKind::Pcf) == 5);
    CHECK(lemma_bound(from_edges(1, {}), 0, LemmaKind::Pcf) == 0);
    CHECK(lemma_bound(from_edges(1, {}), 0, LemmaKind::Odd) == 0);

    // A 5-vertex with five 2-neighbors, none easy.
    Graph h = gen_subdivided(gen_random_regular_multigraph(4, 5, 3));
    REQUIRE(h.degree(0) == 5);
    CHECK(lemma_bound(h, 0, LemmaKind::Odd) == 5);
}

TEST_CASE("find_bad_structure") {
    SUBCASE("SK6 is its own bad structure at c = 5") {
        Graph g = gen_sk(6);
        auto w = find_bad_structure(g, 5);
        REQUIRE(w.has_value());
        CHECK(w->branch == std::vector<int>{0, 1, 2, 3, 4, 5});
        CHECK(validate_bad_structure(g, 5, *w));
    }
    SUBCASE("a pendant on a subdivision vertex destroys it") {
        Graph g = gen_sk(6);
        auto es = g.edges();
        es.emplace_back(6, g.n());  // vertex 6 is the first subdivision vertex
        Graph h = from_edges(g.n() + 1, es);
        CHECK(!find_bad_structure(h, 5).has_value());
    }
    SUBCASE("C5 has none") { CHECK(!find_bad_structure(test::c5(), 5).has_value()); }
    SUBCASE("host edges at branch vertices are allowed") {
        Graph g = gen_sk(6);
        auto es = g.edges();
        int extra = g.n();
        es.emplace_back(0, extra);  // branch vertex degree rises to 6
        Graph h = from_edges(g.n() + 1, es);
        auto w = find_bad_structure(h, 5);
        REQUIRE(w.has_value());
        CHECK(validate_bad_structure(h, 5, *w));
    }
    SUBCASE("every generated SK_n is recognized at c = n-1") {
        for (int n = 5; n <= 8; ++n)
            CHECK(find_bad_structure(gen_sk(n), n - 1).has_value());
    }
}

TEST_CASE("in_class_H") {
    SUBCASE("C5 qualifies with t = 1") {
        auto w = in_class_H(test::c5());
        REQUIRE(w.has_value());
        CHECK(w->blocks.size() == 1);
        CHECK(validate_class_H(test::c5(), *w));
    }
    SUBCASE("bowtie component inside a disjoint union") {
        Graph bow = gen_ht({0});
        auto es = bow.edges();
        int off = bow.n();
        for (auto [u, v] : test::k4().edges()) es.emplace_back(u + off, v + off);
        Graph g = from_edges(off + 4, es);
        auto w = in_class_H(g);
        REQUIRE(w.has_value());
        CHECK(w->blocks.size() == 2);
        CHECK(validate_class_H(g, *w));
    }
    SUBCASE("a pendant edge disqualifies the component") {
        Graph g = from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}});
        CHECK(!in_class_H(g).has_value());
    }
    SUBCASE("generated H_t members are recognized") {
        CHECK(in_class_H(gen_ht({})).has_value());
        CHECK(in_class_H(gen_ht({1, 3})).has_value());
        CHECK(in_class_H(gen_ht({0, 0, 0})).has_value());
    }
}

TEST_CASE("close 2-vertices") {
    SUBCASE("anchor of a 3-thread") {
        Graph g = from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {0, 6}, {4, 5}, {4, 6}});
        // 0 and 4 are 3-vertices; 1,2,3 form a 3-thread; 5, 6 are 2-vertices.
        auto close = close_two_vertices(g, 0);
        CHECK(close == std::vector<int>{1, 2, 3, 5, 6});
    }
    SUBCASE("SK4 branch vertices have 3 close 2-vertices") {
        Graph g = gen_sk(4);
        CHECK(close_two_vertices(g, 0).size() == 3);
    }
    SUBCASE("degree requirement") {
        CHECK_THROWS_AS(close_two_vertices(test::c5(), 0), std::invalid_argument);
    }
    SUBCASE("no threads at v") {
        Graph g = test::k4();
        CHECK(close_two_vertices(g, 0).empty());
    }
}

TEST_CASE("girth_threshold") {
    CHECK(girth_threshold(6) == 6);
    CHECK(girth_threshold(5) == 7);
    CHECK(girth_threshold(10) == 5);
    CHECK_THROWS_AS(girth_threshold(4), std::invalid_argument);
}

TEST_CASE("detect_reducible basics") {
    SUBCASE("pendant vertex fires the 1-vertex rule in every graph context") {
        Graph g = from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}});
        for (auto ctx : {Context::Odd4, Context::PcfC, Context::OddMadC}) {
            auto findings = detect_reducible(g, ctx, 5);
            bool has_1vertex = false;
            for (const auto& f : findings)
                if (f.rule.find("no-1-vertex") != std::string::npos) {
                    has_1vertex = true;
                    CHECK(f.vertices == std::vector<int>{5});
                    CHECK(revalidate_finding(g, f, ctx, 5));
                }
            CHECK(has_1vertex);
        }
    }
    SUBCASE("SK6 at PCF_5 has no 1-vertex/adjacent-2/triangle findings") {
        auto findings = detect_reducible(gen_sk(6), Context::PcfC, 5);
        for (const auto& f : findings) {
            CHECK(f.rule != "pcf:no-1-vertex");
            CHECK(f.rule != "pcf:no-adjacent-2-vertices");
            CHECK(f.rule != "pcf:no-2-vertex-in-triangle");
        }
    }
    SUBCASE("SK5 at PCF_5 fires the lemma bound (branch residue 4 < 5)") {
        auto findings = detect_reducible(gen_sk(5), Context::PcfC, 5);
        bool lemma = false;
        for (const auto& f : findings)
            if (f.rule == "pcf:lemma-bound") lemma = true;
        CHECK(lemma);
    }
    SUBCASE("dodecahedron: adjacent easy vertices") {
        auto pg = test::plane_dodecahedron();
        auto findings = detect_reducible(pg, Context::PlanarOdd6);
        bool adjacent_easy = false;
        for (const auto& f : findings)
            if (f.rule == "planar6:adjacent-easy") {
                adjacent_easy = true;
                CHECK(revalidate_finding(pg, f, Context::PlanarOdd6));
            }
        CHECK(adjacent_easy);
    }
    SUBCASE("planar context rejects plain graphs") {
        CHECK_THROWS_AS(detect_reducible(test::c5(), Context::PlanarOdd6),
                        std::invalid_argument);
    }
    SUBCASE("odd4 thread rules") {
        // A 5-vertex fanning out into five 2-threads: overload.
        std::vector<std::pair<int, int>> es;
        for (int arm = 0; arm < 5; ++arm) {
            es.emplace_back(0, 1 + 2 * arm);
            es.emplace_back(1 + 2 * arm, 2 + 2 * arm);
            es.emplace_back(2 + 2 * arm, 11 + arm);
            es.emplace_back(11 + arm, 16);
            es.emplace_back(11 + arm, 17);
        }
        Graph g = from_edges(18, es);
        REQUIRE(g.degree(0) == 5);
        auto findings = detect_reducible(g, Context::Odd4);
        bool overload = false, odd_at_2thread = false;
        for (const auto& f : findings) {
            if (f.rule == "odd4:2-thread-overload" && f.vertices == std::vector<int>{0})
                overload = true;
            if (f.rule == "odd4:odd-degree-at-2-thread" && f.vertices == std::vector<int>{0})
                odd_at_2thread = true;
        }
        CHECK(overload);
        CHECK(odd_at_2thread);
        CHECK(close_two_vertices(g, 0).size() == 10);
        bool close_overload = false;
        for (const auto& f : findings)
            if (f.rule == "odd4:close-overload" && f.vertices == std::vector<int>{0})
                close_overload = true;
        CHECK(close_overload);  // odd degree caps close 2-vertices at d(v) = 5
    }
    SUBCASE("end-block rules") {
        auto findings = detect_reducible(test::c5(), Context::Odd4);
        bool block5 = false, thread4 = false;
        for (const auto& f : findings) {
            if (f.rule == "odd4:end-block-5-cycle") block5 = true;
            if (f.rule == "odd4:4-thread") thread4 = true;
        }
        CHECK(block5);
        CHECK(thread4);  // the cyclic thread contains a 4-thread
    }
}

TEST_CASE("bad structure implies PCF non-colorability at c (small instances)") {
    Graph g = gen_sk(5);  // in G_4
    CHECK(find_bad_structure(g, 4).has_value());
    CHECK(!solve(g, 4, Mode::Pcf).has_value());
    CHECK(solve(g, 5, Mode::Pcf).has_value());
}

TEST_CASE("class H members: odd-4 absent, odd-5 and PCF-5 present") {
    for (const auto& attachments : std::vector<std::vector<int>>{{}, {0}, {2}}) {
        Graph g = gen_ht(attachments);
        CHECK(!solve(g, 4, Mode::Odd).has_value());
        CHECK(solve(g, 5, Mode::Odd).has_value());
        CHECK(solve(g, 5, Mode::Pcf).has_value());
    }
}

TEST_CASE("planar girth corollary at desk scale") {
    // girth >= ceil(4c/(c-2)) forces PCF c-colorability on the plane fixtures.
    for (const auto& [name, pg] : test::plane_fixtures()) {
        CAPTURE(name);
        auto gr = girth(pg.graph());
        if (!gr) continue;
        for (int c : {5, 6, 7}) {
            if (*gr < girth_threshold(c) || pg.graph().n() > 22) continue;
            auto w = solve(pg.graph(), c, Mode::Pcf);
            REQUIRE(w.has_value());
            CHECK(verify(pg.graph(), *w, VerdictKind::Pcf).ok);
        }
    }
}
