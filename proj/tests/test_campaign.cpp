#include <doctest.h>

#include "oddlab/campaign.hpp"
#include "oddlab/generators.hpp"
#include "oddlab/graph6.hpp"
#include "plane_fixtures.hpp"
#include "test_util.hpp"

using namespace oddlab;

TEST_CASE("query report fields") {
    QueryRequest req;
    req.mad = true;
    req.chi_odd = true;
    Json rec = query_report(test::c5(), req);
    CHECK(rec["mad"] == "2");
    CHECK(rec["chi_odd"] == 5);
    CHECK(rec["graph6"] == write_graph6(test::c5()));
}

TEST_CASE("query report on families") {
    QueryRequest req;
    req.mad = true;
    Json rec = query_report(family_from_string("sk:6"), req);
    CHECK(rec["mad"] == "20/7");

    QueryRequest pcf;
    pcf.chi_pcf = true;
    CHECK(query_report(family_from_string("ht:1"), pcf)["chi_pcf"] == 5);
}

TEST_CASE("classes and detectors in query reports") {
    QueryRequest req;
    req.classes = true;
    req.c = 5;
    Json rec = query_report(gen_sk(6), req);
    CHECK(!rec["bad_structure"].is_null());
    CHECK(rec["class_h"].is_null());
}

TEST_CASE("plane query reports both cycle-adjacency counts") {
    QueryRequest req;
    Json rec = query_report(test::plane_dodecahedron(), req);
    CHECK(rec["hypothesis_planar_odd6"] == true);
    CHECK(rec["small_cycle_pairs_edge_sharing"].is_number());
    CHECK(rec["small_cycle_pairs_vertex_only"].is_number());
}

TEST_CASE("theorem 1.4 campaign on a provided corpus") {
    CampaignOptions options;
    options.corpus = {test::c5(), gen_cycle(7), gen_ht({0}), test::path(4)};
    auto result = verify_theorem("1.4", 4, options);
    CHECK(result.counterexamples == 0);
    CHECK(result.checked == 4);
    CHECK(result.timeouts == 0);
}

TEST_CASE("theorem 1.3 campaign with the structural shortcut") {
    CampaignOptions options;
    options.corpus = {gen_sk(6), test::c5()};
    auto result = verify_theorem("1.3", 5, options);
    CHECK(result.counterexamples == 0);
    const auto& records = result.report["records"];
    REQUIRE(records.size() == 2);
    CHECK(records[0]["shortcut"] == true);  // SK6: solver skipped
    CHECK(records[1]["colorable"] == true);
}

TEST_CASE("odd-mad campaign on sk:6") {
    CampaignOptions options;
    options.corpus = {gen_sk(6)};
    auto result = verify_theorem("odd-mad", 5, options);
    CHECK(result.counterexamples == 0);
    CHECK(result.report["records"][0]["shortcut"] == true);
}

TEST_CASE("campaigns are deterministic across job counts") {
    CampaignOptions serial, parallel;
    serial.corpus = parallel.corpus = {test::c5(), gen_cycle(6), gen_cycle(7), gen_ht({0})};
    serial.jobs = 1;
    parallel.jobs = 4;
    auto a = verify_theorem("1.4", 4, serial);
    auto b = verify_theorem("1.4", 4, parallel);
    CHECK(a.report == b.report);
}

TEST_CASE("exhaustive 1.4 campaign at n <= 5 has no counterexamples") {
    CampaignOptions options;
    options.max_n = 5;
    auto result = verify_theorem("1.4", 4, options);
    CHECK(result.counterexamples == 0);
    CHECK(result.checked > 0);
}

TEST_CASE("discharge report pairs audits with detectors") {
    Json rep = discharge_report(gen_sk(6), RuleSet::pcf5(), Rational(20, 7));
    CHECK(rep["violations"].empty());
    CHECK(rep["ledger"]["conserved"] == true);

    Json planar = discharge_report(test::plane_dodecahedron(), RuleSet::planar6(),
                                   Rational(0));
    CHECK(!planar["violations"].empty());
    CHECK(!planar["findings"].empty());
    CHECK(planar["ledger"]["total_initial"] == "-12");
}
