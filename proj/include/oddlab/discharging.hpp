#ifndef ODDLAB_DISCHARGING_HPP
#define ODDLAB_DISCHARGING_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "oddlab/plane_graph.hpp"
#include "oddlab/rational.hpp"

namespace oddlab {

// Named rule sets. Amounts are the papers' exact rationals:
//   Odd4TwoNinths:  3+-vertices pay 2/9 to each close 2-vertex.
//   PcfC5:          3+ pay 3/7 per 2-neighbor; 4+ pay 4/21 to 3-neighbors with
//                   a 2-neighbor and to 4-neighbors with three 2-neighbors.
//   PcfC6Plus(c):   4+ pay (c-2)/(c+2) per 2-neighbor, (c-6)/(3(c+2)) per
//                   3-neighbor.
//   OddAppB(c,eps): 2-vertices draw (c-2)/(c+2) from 3+-neighbors; 3-vertices
//                   draw (2c-8+2eps)/((c+2)t) from each of their t non-easy
//                   4+-neighbors; 4+-vertices draw (1+eps)/(c+2) from non-easy
//                   4+-neighbors.
//   PlanarOdd6:     face/vertex rules R1-R7 with mu(v) = d(v)-6,
//                   mu(f) = 2d(f)-6.
struct RuleSet {
    enum class Id { Odd4TwoNinths, PcfC5, PcfC6Plus, OddAppB, PlanarOdd6 };
    Id id;
    int c = 0;          // PcfC6Plus, OddAppB
    Rational epsilon;   // OddAppB only

    static RuleSet odd4() { return {Id::Odd4TwoNinths, 4, Rational(0)}; }
    static RuleSet pcf5() { return {Id::PcfC5, 5, Rational(0)}; }
    static RuleSet pcf6plus(int c);
    // eps defaults to 1/(100(c+2)); the paper only asks for "sufficiently
    // small positive", and the audits assert the strict inequalities instead
    // of assuming them.
    static RuleSet odd_appb(int c, std::optional<Rational> eps = std::nullopt);
    static RuleSet planar6() { return {Id::PlanarOdd6, 6, Rational(0)}; }

    bool needs_faces() const { return id == Id::PlanarOdd6; }
    std::string name() const;
};

struct Entity {
    enum class Kind { Vertex, Face };
    Kind kind;
    int index;

    friend bool operator==(const Entity& a, const Entity& b) {
        return a.kind == b.kind && a.index == b.index;
    }
};

struct Transfer {
    Entity from, to;
    Rational amount;
    std::string rule;  // "R1", "R2", ...
    int phase;         // 1 = face/vertex charge rules, 2 = vertex-to-vertex
};

struct ChargeLedger {
    std::vector<Rational> vertex_initial, vertex_final;
    std::vector<Rational> face_initial, face_final;  // empty for pure-graph rule sets
    std::vector<Transfer> transfers;

    Rational total_initial() const;
    Rational total_final() const;
};

// Charges before any transfer: mu(v) = d(v) for the mad rule sets;
// mu(v) = d(v) - 6 and mu(f) = 2 d(f) - 6 for PlanarOdd6.
ChargeLedger initial_charges(const Graph& g, const RuleSet& rules);
ChargeLedger initial_charges(const PlaneGraph& pg, const RuleSet& rules);

// Full run: initial charges plus every transfer, logged.
ChargeLedger run_rules(const Graph& g, const RuleSet& rules);
ChargeLedger run_rules(const PlaneGraph& pg, const RuleSet& rules);

enum class AuditScope { Vertices, Faces, All };

struct AuditViolation {
    Entity entity;
    Rational final_charge;
};

// Entities in scope whose final charge is below the bound.
std::vector<AuditViolation> audit(const ChargeLedger& ledger, const Rational& bound,
                                  AuditScope scope);

}  // namespace oddlab

#endif
