// Command-line front end: per-graph queries, theorem-verification campaigns,
// discharging runs, and family generation.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "oddlab/campaign.hpp"
#include "oddlab/coloring.hpp"
#include "oddlab/generators.hpp"
#include "oddlab/graph6.hpp"

using namespace oddlab;

namespace {

struct InputOptions {
    std::string graph6;
    std::string family;
    std::string plane_file;
    bool from_stdin = false;
    uint64_t seed = 1;
};

void add_input_flags(CLI::App* cmd, InputOptions& in, bool allow_plane) {
    cmd->add_option("--graph6", in.graph6, "graph6 line");
    cmd->add_option("--family", in.family,
                    "family spec, e.g. sk:6, cycle:8, ht:1, ht:0,4, subdiv:reg5x2, "
                    "rand:10:22/9:42, odd4x:4");
    if (allow_plane)
        cmd->add_option("--plane", in.plane_file, "plane graph file (planegraph format)");
    cmd->add_flag("--stdin", in.from_stdin, "read graph6 lines from stdin");
}

std::vector<Graph> load_graphs(const InputOptions& in) {
    std::vector<Graph> graphs;
    if (!in.graph6.empty()) graphs.push_back(parse_graph6(in.graph6));
    if (!in.family.empty()) graphs.push_back(family_from_string(in.family, in.seed));
    if (in.from_stdin) {
        std::string line;
        while (std::getline(std::cin, line)) {
            if (line.empty() || line[0] == '#') continue;
            graphs.push_back(parse_graph6(line));
        }
    }
    return graphs;
}

std::optional<PlaneGraph> load_plane(const InputOptions& in) {
    if (in.plane_file.empty()) return std::nullopt;
    std::ifstream f(in.plane_file);
    if (!f) throw std::runtime_error("cannot open " + in.plane_file);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_plane_graph(buf.str());
}

void emit(const Json& out, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open " + out_path);
        f << out.dump(2) << "\n";
    }
}

RuleSet parse_rules(const std::string& spec) {
    if (spec == "odd4") return RuleSet::odd4();
    if (spec == "pcf5") return RuleSet::pcf5();
    if (spec == "planar6") return RuleSet::planar6();
    if (spec.rfind("pcf6:", 0) == 0) return RuleSet::pcf6plus(std::stoi(spec.substr(5)));
    if (spec.rfind("oddmad:", 0) == 0) {
        auto rest = spec.substr(7);
        auto colon = rest.find(':');
        int c = std::stoi(rest.substr(0, colon == std::string::npos ? rest.size() : colon));
        std::optional<Rational> eps;
        if (colon != std::string::npos) eps = Rational::parse(rest.substr(colon + 1));
        return RuleSet::odd_appb(c, eps);
    }
    throw std::runtime_error("unknown rule set '" + spec +
                             "' (odd4 | pcf5 | pcf6:<c> | oddmad:<c>[:<eps>] | planar6)");
}

Context parse_context(const std::string& s) {
    if (s == "pcf") return Context::PcfC;
    if (s == "oddmad") return Context::OddMadC;
    if (s == "odd4") return Context::Odd4;
    if (s == "planar6") return Context::PlanarOdd6;
    throw std::runtime_error("unknown detector context '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"odd / proper conflict-free coloring laboratory"};
    app.require_subcommand(1);
    app.fallthrough();  // --out/--jobs/--budget-ms may follow the subcommand

    std::string out_path;
    int jobs = 1;
    long long budget_ms = 10000;
    uint64_t seed = 1;
    app.add_option("--out", out_path, "write JSON report to file instead of stdout");
    app.add_option("--jobs", jobs, "worker pool size");
    app.add_option("--budget-ms", budget_ms, "per-graph solver budget");
    app.add_option("--seed", seed, "default seed for randomized families");

    // query
    auto* query = app.add_subcommand("query", "per-graph quantities as one JSON record");
    InputOptions query_in;
    add_input_flags(query, query_in, true);
    QueryRequest req;
    std::string detect_ctx;
    query->add_flag("--mad", req.mad, "exact maximum average degree");
    query->add_flag("--chi", req.chi_proper, "chromatic number");
    query->add_flag("--chi-odd", req.chi_odd, "odd chromatic number");
    query->add_flag("--chi-pcf", req.chi_pcf, "PCF chromatic number");
    query->add_flag("--girth", req.girth, "girth");
    query->add_flag("--blocks", req.blocks, "block decomposition");
    query->add_flag("--classes", req.classes, "bad-structure and class-H membership");
    query->add_option("--detect", detect_ctx, "reducible configurations (pcf|oddmad|odd4|planar6)");
    query->add_option("--c", req.c, "palette parameter for classes/detectors")->default_val(5);
    std::string query_rules, query_bound = "0";
    query->add_option("--discharge", query_rules, "include a discharge section (rule set name)");
    query->add_option("--bound", query_bound, "audit bound for --discharge");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "theorem-verification campaign");
    InputOptions verify_in;
    add_input_flags(verify_cmd, verify_in, false);
    std::string theorem, csv_path;
    int verify_c = 5, max_n = 7;
    verify_cmd->add_option("--theorem", theorem, "1.3 | 1.4 | odd-mad")->required();
    verify_cmd->add_option("--c", verify_c, "palette parameter (1.3, odd-mad)");
    verify_cmd->add_option("--max-n", max_n, "exhaustive corpus bound")->default_val(7);
    verify_cmd->add_option("--csv", csv_path, "also write a per-record CSV summary");

    // discharge
    auto* discharge = app.add_subcommand("discharge", "run a rule set and audit the ledger");
    InputOptions discharge_in;
    add_input_flags(discharge, discharge_in, true);
    std::string rules_spec, bound_spec = "0";
    discharge->add_option("--rules", rules_spec, "odd4 | pcf5 | pcf6:<c> | oddmad:<c>[:<eps>] | planar6")
        ->required();
    discharge->add_option("--bound", bound_spec, "audit bound, e.g. 22/9");

    // gen
    auto* gen = app.add_subcommand("gen", "emit a family member as graph6");
    std::string gen_family;
    gen->add_option("--family", gen_family, "family spec")->required();

    CLI11_PARSE(app, argc, argv);
    query_in.seed = verify_in.seed = discharge_in.seed = seed;

    try {
        if (*query) {
            if (!detect_ctx.empty()) {
                req.detect = true;
                req.detect_ctx = parse_context(detect_ctx);
            }
            if (!query_rules.empty()) {
                req.discharge_rules = parse_rules(query_rules);
                req.discharge_bound = Rational::parse(query_bound);
            }
            auto plane = load_plane(query_in);
            auto graphs = load_graphs(query_in);
            Json out = Json::array();
            for (const auto& g : graphs) out.push_back(query_report(g, req));
            if (plane) out.push_back(query_report(*plane, req));
            emit(out.size() == 1 ? out[0] : out, out_path);
        } else if (*verify_cmd) {
            CampaignOptions options;
            options.max_n = max_n;
            options.jobs = jobs;
            options.budget = std::chrono::milliseconds(budget_ms);
            options.corpus = load_graphs(verify_in);
            auto result = verify_theorem(theorem, verify_c, options);
            if (!csv_path.empty()) {
                std::ofstream csv(csv_path);
                if (!csv) throw std::runtime_error("cannot open " + csv_path);
                csv << "graph6,mad,consistent,colorable,shortcut,timeout\n";
                for (const auto& rec : result.report["records"]) {
                    auto cell = [&](const char* key) {
                        return rec.contains(key) ? rec[key].dump() : std::string();
                    };
                    csv << rec["graph6"].get<std::string>() << ","
                        << rec["mad"].get<std::string>() << "," << cell("consistent") << ","
                        << cell("colorable") << "," << cell("shortcut") << ","
                        << cell("timeout") << "\n";
                }
            }
            emit(result.report, out_path);
            return result.counterexamples == 0 ? 0 : 1;
        } else if (*discharge) {
            RuleSet rules = parse_rules(rules_spec);
            Rational bound = Rational::parse(bound_spec);
            Json out = Json::array();
            if (auto plane = load_plane(discharge_in))
                out.push_back(discharge_report(*plane, rules, bound));
            for (const auto& g : load_graphs(discharge_in))
                out.push_back(discharge_report(g, rules, bound));
            if (out.empty()) throw std::runtime_error("discharge: no input graph");
            emit(out.size() == 1 ? out[0] : out, out_path);
        } else if (*gen) {
            std::cout << write_graph6(family_from_string(gen_family, seed)) << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
