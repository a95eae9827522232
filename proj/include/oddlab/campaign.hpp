#ifndef ODDLAB_CAMPAIGN_HPP
#define ODDLAB_CAMPAIGN_HPP

#include <atomic>
#include <chrono>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "oddlab/discharging.hpp"
#include "oddlab/plane_graph.hpp"
#include "oddlab/structures.hpp"

namespace oddlab {

using Json = nlohmann::ordered_json;

// Deterministic worker pool: records are computed into per-index slots and
// merged in input order, so output is independent of the job count.
template <typename F>
void parallel_for(int count, int jobs, F&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    int spawn = std::min(jobs, count);
    workers.reserve(spawn);
    for (int j = 0; j < spawn; ++j)
        workers.emplace_back([&] {
            for (int i; (i = next.fetch_add(1)) < count;) fn(i);
        });
    for (auto& w : workers) w.join();
}

struct QueryRequest {
    bool mad = false;
    bool chi_odd = false;
    bool chi_pcf = false;
    bool chi_proper = false;
    bool girth = false;
    bool blocks = false;
    bool classes = false;  // bad structure (at c) + class H
    bool detect = false;
    std::optional<Context> detect_ctx;
    int c = 5;
    std::optional<RuleSet> discharge_rules;
    std::optional<Rational> discharge_bound;
};

Json query_report(const Graph& g, const QueryRequest& req);
Json query_report(const PlaneGraph& pg, const QueryRequest& req);

Json ledger_json(const ChargeLedger& ledger);

// Discharge run: ledger, audit against the bound, and the paired reducible-
// configuration findings for the rule set's context.
Json discharge_report(const Graph& g, const RuleSet& rules, const Rational& bound);
Json discharge_report(const PlaneGraph& pg, const RuleSet& rules, const Rational& bound);

struct CampaignOptions {
    int max_n = 7;          // exhaustive corpus: all connected graphs up to this order
    int jobs = 1;
    std::chrono::milliseconds budget{10000};
    std::vector<Graph> corpus;  // when non-empty, replaces the exhaustive corpus
};

struct CampaignResult {
    Json report;
    long long checked = 0;
    long long counterexamples = 0;
    long long timeouts = 0;
};

// Theorem ids: "1.3" (PCF, needs c >= 5), "1.4" (odd 4-coloring, mad <= 22/9),
// "odd-mad" (odd coloring, needs c >= 5). Each runs the biconditional
// solver-vs-recognizer check over every corpus graph passing the mad filter.
CampaignResult verify_theorem(const std::string& theorem_id, int c,
                              const CampaignOptions& options);

Json coloring_json(const std::vector<int>& colors);
Json findings_json(const std::vector<ConfigurationFinding>& findings);

}  // namespace oddlab

#endif
