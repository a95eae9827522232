#include "oddlab/discharging.hpp"

#include <stdexcept>

#include "oddlab/structures.hpp"
#include "oddlab/threads.hpp"

namespace oddlab {

RuleSet RuleSet::pcf6plus(int c) {
    if (c < 6) throw std::invalid_argument("PcfC6Plus: c < 6");
    return {Id::PcfC6Plus, c, Rational(0)};
}

RuleSet RuleSet::odd_appb(int c, std::optional<Rational> eps) {
    if (c < 5) throw std::invalid_argument("OddAppB: c < 5");
    Rational e = eps.value_or(Rational(1, 100 * (c + 2)));
    if (e <= Rational(0)) throw std::invalid_argument("OddAppB: eps must be positive");
    return {Id::OddAppB, c, e};
}

std::string RuleSet::name() const {
    switch (id) {
        case Id::Odd4TwoNinths: return "odd4";
        case Id::PcfC5: return "pcf5";
        case Id::PcfC6Plus: return "pcf6:" + std::to_string(c);
        case Id::OddAppB: return "oddmad:" + std::to_string(c);
        case Id::PlanarOdd6: return "planar6";
    }
    return "?";
}

Rational ChargeLedger::total_initial() const {
    Rational t(0);
    for (const auto& r : vertex_initial) t += r;
    for (const auto& r : face_initial) t += r;
    return t;
}

Rational ChargeLedger::total_final() const {
    Rational t(0);
    for (const auto& r : vertex_final) t += r;
    for (const auto& r : face_final) t += r;
    return t;
}

namespace {

ChargeLedger make_initial(const Graph& g, const PlaneGraph* pg, const RuleSet& rules) {
    if (rules.needs_faces() && pg == nullptr)
        throw std::invalid_argument("rule set " + rules.name() + " needs a plane graph");
    ChargeLedger ledger;
    ledger.vertex_initial.reserve(g.n());
    for (int v = 0; v < g.n(); ++v)
        ledger.vertex_initial.push_back(rules.needs_faces() ? Rational(g.degree(v) - 6)
                                                            : Rational(g.degree(v)));
    if (rules.needs_faces())
        for (int f = 0; f < pg->face_count(); ++f)
            ledger.face_initial.push_back(Rational(2 * pg->face_degree(f) - 6));
    ledger.vertex_final = ledger.vertex_initial;
    ledger.face_final = ledger.face_initial;
    return ledger;
}

struct Runner {
    ChargeLedger& ledger;

    void move(Entity from, Entity to, const Rational& amount, const std::string& rule,
              int phase) {
        if (amount == Rational(0)) return;
        auto& src = from.kind == Entity::Kind::Vertex ? ledger.vertex_final[from.index]
                                                      : ledger.face_final[from.index];
        auto& dst = to.kind == Entity::Kind::Vertex ? ledger.vertex_final[to.index]
                                                    : ledger.face_final[to.index];
        src -= amount;
        dst += amount;
        ledger.transfers.push_back({from, to, amount, rule, phase});
    }

    void vertex_to_vertex(int from, int to, const Rational& amount, const std::string& rule,
                          int phase = 1) {
        move({Entity::Kind::Vertex, from}, {Entity::Kind::Vertex, to}, amount, rule, phase);
    }
    void face_to_vertex(int from, int to, const Rational& amount, const std::string& rule) {
        move({Entity::Kind::Face, from}, {Entity::Kind::Vertex, to}, amount, rule, 1);
    }
};

void run_odd4(const Graph& g, ChargeLedger& ledger) {
    Runner run{ledger};
    auto td = threads(g);
    const Rational amount(2, 9);
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) < 3) continue;
        for (int u : close_two_vertices(g, td, v))
            run.vertex_to_vertex(v, u, amount, "R1");
    }
}

void run_pcf5(const Graph& g, ChargeLedger& ledger) {
    Runner run{ledger};
    for (int v = 0; v < g.n(); ++v) {
        int d = g.degree(v);
        if (d < 3) continue;
        for (int u : g.neighbors(v)) {
            if (g.degree(u) == 2) run.vertex_to_vertex(v, u, Rational(3, 7), "R1");
            if (d >= 4) {
                DegStats su = deg_stats(g, u);
                bool takes = (su.d == 3 && su.n2 >= 1) || (su.d == 4 && su.n2 >= 3);
                if (takes) run.vertex_to_vertex(v, u, Rational(4, 21), "R2");
            }
        }
    }
}

void run_pcf6plus(const Graph& g, int c, ChargeLedger& ledger) {
    Runner run{ledger};
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) < 4) continue;
        for (int u : g.neighbors(v)) {
            if (g.degree(u) == 2) run.vertex_to_vertex(v, u, Rational(c - 2, c + 2), "R1");
            if (g.degree(u) == 3)
                run.vertex_to_vertex(v, u, Rational(c - 6, 3 * (c + 2)), "R2");
        }
    }
}

void run_odd_appb(const Graph& g, int c, const Rational& eps, ChargeLedger& ledger) {
    Runner run{ledger};
    for (int v = 0; v < g.n(); ++v) {
        int d = g.degree(v);
        if (d == 2) {
            for (int u : g.neighbors(v))
                if (g.degree(u) >= 3)
                    run.vertex_to_vertex(u, v, Rational(c - 2, c + 2), "R1");
        } else if (d == 3) {
            std::vector<int> payers;
            for (int u : g.neighbors(v))
                if (g.degree(u) >= 4 && !is_easy(g, u)) payers.push_back(u);
            if (!payers.empty()) {
                Rational amount = (Rational(2 * c - 8) + Rational(2) * eps) /
                                  (Rational(c + 2) * Rational((long long)payers.size()));
                for (int u : payers) run.vertex_to_vertex(u, v, amount, "R2");
            }
        } else if (d >= 4) {
            for (int u : g.neighbors(v))
                if (g.degree(u) >= 4 && !is_easy(g, u))
                    run.vertex_to_vertex(u, v, (Rational(1) + eps) / Rational(c + 2), "R3");
        }
    }
}

void run_planar6(const PlaneGraph& pg, ChargeLedger& ledger) {
    Runner run{ledger};
    const Graph& g = pg.graph();

    // Bad face: a 5-face incident with a 2-vertex; other 5-faces are good.
    auto face_has_2vertex = [&](int f) {
        for (int v : pg.face(f))
            if (g.degree(v) == 2) return true;
        return false;
    };

    // Face rules R1-R5, applied per incidence on the boundary walk.
    for (int f = 0; f < pg.face_count(); ++f) {
        const auto& walk = pg.face(f);
        int d = (int)walk.size();
        bool bad = d == 5 && face_has_2vertex(f);
        bool good = d == 5 && !bad;
        for (size_t i = 0; i < walk.size(); ++i) {
            int v = walk[i];
            int dv = g.degree(v);
            if (dv == 2) run.face_to_vertex(f, v, Rational(2), "R1");
            if ((d == 4 || d == 5) && dv == 3) run.face_to_vertex(f, v, Rational(1), "R2");
            if (bad && dv >= 4) run.face_to_vertex(f, v, Rational(1, 2), "R3");
            if (good && dv >= 4)
                run.face_to_vertex(f, v, is_easy(g, v) ? Rational(1) : Rational(1, 2), "R4");
            if (d >= 6 && dv >= 3) {
                int x = walk[(i + walk.size() - 1) % walk.size()];
                int z = walk[(i + 1) % walk.size()];
                int two = (g.degree(x) == 2 ? 1 : 0) + (g.degree(z) == 2 ? 1 : 0);
                Rational amount = (Rational(2 * d - 6, d) - Rational(1)) * Rational(two) +
                                  Rational(d - 3, d) * Rational(2 - two);
                run.face_to_vertex(f, v, amount, "R5");
            }
        }
    }

    // Vertex rules R6/R7 along edges of small faces, logged as phase 2.
    for (int f = 0; f < pg.face_count(); ++f) {
        const auto& walk = pg.face(f);
        int d = (int)walk.size();
        if (d > 4) continue;
        for (size_t i = 0; i < walk.size(); ++i) {
            int v = walk[i], w = walk[(i + 1) % walk.size()];
            for (int rep = 0; rep < 2; ++rep) {
                if (g.degree(v) >= 4 && !is_easy(g, v)) {
                    if (d == 3 && g.degree(w) == 3)
                        run.vertex_to_vertex(v, w, Rational(1, 4), "R6", 2);
                    if (g.degree(w) == 4 && is_easy(g, w))
                        run.vertex_to_vertex(v, w, Rational(1, 8), "R7", 2);
                }
                std::swap(v, w);
            }
        }
    }
}

}  // namespace

ChargeLedger initial_charges(const Graph& g, const RuleSet& rules) {
    return make_initial(g, nullptr, rules);
}

ChargeLedger initial_charges(const PlaneGraph& pg, const RuleSet& rules) {
    return make_initial(pg.graph(), &pg, rules);
}

ChargeLedger run_rules(const Graph& g, const RuleSet& rules) {
    ChargeLedger ledger = initial_charges(g, rules);
    switch (rules.id) {
        case RuleSet::Id::Odd4TwoNinths: run_odd4(g, ledger); break;
        case RuleSet::Id::PcfC5: run_pcf5(g, ledger); break;
        case RuleSet::Id::PcfC6Plus: run_pcf6plus(g, rules.c, ledger); break;
        case RuleSet::Id::OddAppB: run_odd_appb(g, rules.c, rules.epsilon, ledger); break;
        case RuleSet::Id::PlanarOdd6:
            throw std::invalid_argument("planar6 rules need a plane graph");
    }
    return ledger;
}

ChargeLedger run_rules(const PlaneGraph& pg, const RuleSet& rules) {
    if (!rules.needs_faces()) return run_rules(pg.graph(), rules);
    ChargeLedger ledger = initial_charges(pg, rules);
    run_planar6(pg, ledger);
    return ledger;
}

std::vector<AuditViolation> audit(const ChargeLedger& ledger, const Rational& bound,
                                  AuditScope scope) {
    std::vector<AuditViolation> out;
    if (scope != AuditScope::Faces)
        for (int v = 0; v < (int)ledger.vertex_final.size(); ++v)
            if (ledger.vertex_final[v] < bound)
                out.push_back({{Entity::Kind::Vertex, v}, ledger.vertex_final[v]});
    if (scope != AuditScope::Vertices)
        for (int f = 0; f < (int)ledger.face_final.size(); ++f)
            if (ledger.face_final[f] < bound)
                out.push_back({{Entity::Kind::Face, f}, ledger.face_final[f]});
    return out;
}

}  // namespace oddlab
