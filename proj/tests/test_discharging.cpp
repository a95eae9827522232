#include <doctest.h>

#include "oddlab/density.hpp"
#include "oddlab/discharging.hpp"
#include "oddlab/structures.hpp"
#include "plane_fixtures.hpp"
#include "test_util.hpp"

using namespace oddlab;

namespace {

bool conserved(const ChargeLedger& ledger) {
    return ledger.total_initial() == ledger.total_final();
}

}  // namespace

TEST_CASE("initial charges") {
    Graph g = test::star(4);
    auto ledger = initial_charges(g, RuleSet::odd4());
    CHECK(ledger.vertex_initial[0] == Rational(4));
    CHECK(ledger.vertex_initial[1] == Rational(1));

    auto pg = test::plane_cube();
    auto planar = initial_charges(pg, RuleSet::planar6());
    CHECK(planar.vertex_initial[0] == Rational(-3));  // d - 6
    CHECK(planar.face_initial[0] == Rational(2));     // 2d - 6
    CHECK(planar.total_initial() == Rational(-12));

    // A 5-face starts at 2*5 - 6 = 4.
    auto dodeca = initial_charges(test::plane_dodecahedron(), RuleSet::planar6());
    CHECK(dodeca.face_initial[0] == Rational(4));

    CHECK_THROWS_AS(initial_charges(g, RuleSet::planar6()), std::invalid_argument);
}

TEST_CASE("every connected plane fixture has initial charge sum -12") {
    for (const auto& [name, pg] : test::plane_fixtures()) {
        CAPTURE(name);
        CHECK(initial_charges(pg, RuleSet::planar6()).total_initial() == Rational(-12));
    }
}

TEST_CASE("odd4 rule: 2-vertex with two sponsors ends at 22/9") {
    // v anchors nothing; 2-vertices on a 2-thread between two 3-vertices.
    Graph g = from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}, {3, 6}, {3, 7}});
    auto ledger = run_rules(g, RuleSet::odd4());
    CHECK(conserved(ledger));
    CHECK(ledger.vertex_final[1] == Rational(2) + Rational(2, 9) * Rational(2));
    CHECK(ledger.vertex_final[1] == Rational(22, 9));
}

TEST_CASE("odd4 on the extremal family: all charges exactly 22/9") {
    for (int k : {2, 4, 6}) {
        Graph g = gen_odd4_extremal(k);
        CHECK(mad_exact(g) == Rational(22, 9));
        // Every 4-vertex has exactly 7 close 2-vertices.
        for (int v = 0; v < g.n(); ++v)
            if (g.degree(v) == 4) CHECK(close_two_vertices(g, v).size() == 7);
        auto ledger = run_rules(g, RuleSet::odd4());
        CHECK(conserved(ledger));
        for (int v = 0; v < g.n(); ++v) CHECK(ledger.vertex_final[v] == Rational(22, 9));
        CHECK(audit(ledger, Rational(22, 9), AuditScope::Vertices).empty());
    }
}

TEST_CASE("odd4 audit flags a 1-vertex") {
    Graph g = from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}});
    auto ledger = run_rules(g, RuleSet::odd4());
    auto violations = audit(ledger, Rational(22, 9), AuditScope::Vertices);
    bool pendant_flagged = false;
    for (const auto& v : violations)
        if (v.entity.index == 5) pendant_flagged = true;
    CHECK(pendant_flagged);
}

TEST_CASE("pcf5 on subdivided 5-regular multigraphs: all charges 20/7") {
    for (uint64_t seed : {1, 2, 3}) {
        Graph g = gen_subdivided(gen_random_regular_multigraph(4, 5, seed));
        auto ledger = run_rules(g, RuleSet::pcf5());
        CHECK(conserved(ledger));
        for (int v = 0; v < g.n(); ++v) CHECK(ledger.vertex_final[v] == Rational(20, 7));
    }
    // The two-vertex case from the paper's construction.
    Graph k25 = gen_subdivided(Multigraph(2, std::vector<std::pair<int, int>>(5, {0, 1})));
    auto ledger = run_rules(k25, RuleSet::pcf5());
    for (int v = 0; v < k25.n(); ++v) CHECK(ledger.vertex_final[v] == Rational(20, 7));
}

TEST_CASE("pcf6plus(c) on subdivided c-regular multigraphs: all charges 4c/(c+2)") {
    for (int c : {6, 7, 8}) {
        Graph g = gen_subdivided(gen_random_regular_multigraph(c % 2 == 0 ? 3 : 4, c, c));
        auto ledger = run_rules(g, RuleSet::pcf6plus(c));
        CHECK(conserved(ledger));
        for (int v = 0; v < g.n(); ++v)
            CHECK(ledger.vertex_final[v] == Rational(4 * c, c + 2));
    }
}

TEST_CASE("oddmad rules on subdivided c-regular multigraphs") {
    for (int c : {5, 6}) {
        Graph g = gen_subdivided(gen_random_regular_multigraph(4, c, c));
        auto ledger = run_rules(g, RuleSet::odd_appb(c));
        CHECK(conserved(ledger));
        for (int v = 0; v < g.n(); ++v)
            CHECK(ledger.vertex_final[v] == Rational(4 * c, c + 2));
        CHECK(audit(ledger, Rational(4 * c, c + 2), AuditScope::All).empty());
    }
}

TEST_CASE("planar6 rules") {
    SUBCASE("R5 amount: an 8-face gives 1/2 across two 2-vertex sides") {
        // C8 with two opposite vertices raised to degree 3 via chords to new
        // leaves is overkill; check the arithmetic on the formula directly
        // through a subdivided cube instead: its faces are 8-walks alternating
        // 3- and 2-vertices, so every 3-vertex incidence has two 2-vertex
        // sides and receives 2 * ((2*8-6)/8 - 1) = 1/2.
        auto pg = test::subdivide_plane(test::plane_cube());
        auto ledger = run_rules(pg, RuleSet::planar6());
        CHECK(conserved(ledger));
        Rational half(1, 2);
        for (const auto& t : ledger.transfers)
            if (t.rule == "R5" && pg.graph().degree(t.to.index) == 3)
                CHECK(t.amount == half);
    }
    SUBCASE("conservation and the -12 sum leave some entity negative") {
        for (const auto& [name, pg] : test::plane_fixtures()) {
            CAPTURE(name);
            auto ledger = run_rules(pg, RuleSet::planar6());
            CHECK(conserved(ledger));
            CHECK(ledger.total_final() == Rational(-12));
            CHECK(!audit(ledger, Rational(0), AuditScope::All).empty());
        }
    }
    SUBCASE("graph-only input rejected") {
        CHECK_THROWS_AS(run_rules(test::c5(), RuleSet::planar6()), std::invalid_argument);
    }
}

TEST_CASE("silent detectors imply a clean audit on mad-bounded corpora") {
    struct Case {
        RuleSet rules;
        Context ctx;
        Rational bound;
    };
    std::vector<Case> cases{
        {RuleSet::odd4(), Context::Odd4, Rational(22, 9)},
        {RuleSet::pcf5(), Context::PcfC, Rational(20, 7)},
        {RuleSet::pcf6plus(6), Context::PcfC, Rational(3)},
        {RuleSet::odd_appb(5), Context::OddMadC, Rational(20, 7)},
        {RuleSet::odd_appb(6), Context::OddMadC, Rational(3)},
    };
    for (const auto& [rules, ctx, bound] : cases) {
        // Random mad-bounded graphs rarely dodge every configuration, so the
        // matching extremal family seeds the silent corpus deterministically.
        std::vector<Graph> corpus;
        if (rules.id == RuleSet::Id::Odd4TwoNinths) {
            for (int k : {2, 4, 6}) corpus.push_back(gen_odd4_extremal(k));
        } else {
            int r = rules.id == RuleSet::Id::PcfC5 ? 5 : rules.c;
            for (uint64_t seed : {3, 4})
                corpus.push_back(gen_subdivided(gen_random_regular_multigraph(4, r, seed)));
        }
        for (uint64_t seed = 1; seed <= 40; ++seed)
            corpus.push_back(
                test::drop_isolated(gen_random_mad_bounded(8 + (int)(seed % 5), bound, seed)));

        int silent_seen = 0;
        for (const Graph& g : corpus) {
            if (g.n() == 0) continue;
            if (!detect_reducible(g, ctx, rules.c).empty()) continue;
            ++silent_seen;
            auto ledger = run_rules(g, rules);
            CHECK(conserved(ledger));
            CHECK(audit(ledger, bound, AuditScope::Vertices).empty());
        }
        CHECK(silent_seen >= 2);  // at least the extremal members are silent
    }
}

TEST_CASE("transfer log balances per entity") {
    Graph g = gen_odd4_extremal(4);
    auto ledger = run_rules(g, RuleSet::odd4());
    std::vector<Rational> delta(g.n(), Rational(0));
    for (const auto& t : ledger.transfers) {
        delta[t.from.index] -= t.amount;
        delta[t.to.index] += t.amount;
    }
    for (int v = 0; v < g.n(); ++v)
        CHECK(ledger.vertex_initial[v] + delta[v] == ledger.vertex_final[v]);
}
