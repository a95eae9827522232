#ifndef ODDLAB_COLORING_HPP
#define ODDLAB_COLORING_HPP

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "oddlab/graph.hpp"

namespace oddlab {

// Vertex -> optional color map over palette 1..c; 0 means uncolored.
class PartialColoring {
public:
    PartialColoring(int n, int palette) : colors_(n, 0), palette_(palette) {}

    int n() const { return (int)colors_.size(); }
    int palette() const { return palette_; }
    int color(int v) const { return colors_[v]; }
    bool colored(int v) const { return colors_[v] != 0; }
    bool total() const;

    void set(int v, int color);
    void unset(int v) { colors_[v] = 0; }

    const std::vector<int>& raw() const { return colors_; }

private:
    std::vector<int> colors_;
    int palette_;
};

enum class VerdictKind { Proper, Odd, Pcf, SemiPcf, SemiOdd };
enum class Mode { Proper, Odd, Pcf };

struct Violation {
    int vertex;
    std::string reason;
};

struct ColorVerdict {
    VerdictKind kind;
    bool ok;
    std::vector<Violation> violations;
};

// Least color appearing exactly once among v's colored neighbors.
std::optional<int> pcf_color_of(const Graph& g, const PartialColoring& phi, int v);

// Least color of odd multiplicity among v's colored neighbors; `unique` is set
// when it is the only one.
struct OddColor {
    int color;
    bool unique;
};
std::optional<OddColor> odd_color_of(const Graph& g, const PartialColoring& phi, int v);

// Total-coloring checks. Odd: proper and every non-isolated vertex sees some
// color an odd number of times. Pcf: proper and every non-isolated vertex sees
// some color exactly once. Throws if the coloring is not total.
ColorVerdict verify(const Graph& g, const PartialColoring& phi, VerdictKind kind);

// Semi checks for (G, Y): phi must color exactly V - Y, properly there. The
// pointwise condition is waived for vertices isolated in G - Y, and for the
// exemption set: N(Y) with degree exactly 2 in G - Y (semi-PCF), or all of
// N(Y) (semi-odd). PCF/odd colors are evaluated within G - Y.
ColorVerdict verify_semi_pcf(const Graph& g, const std::vector<int>& y,
                             const PartialColoring& phi);
ColorVerdict verify_semi_odd(const Graph& g, const std::vector<int>& y,
                             const PartialColoring& phi);

// Exact solver: backtracking in descending-degree order, colors introduced in
// first-use order, properness pruned immediately, and a vertex's odd/PCF
// condition checked the moment its last neighbor is colored. Absence is
// certified by exhaustion.
std::optional<PartialColoring> solve(const Graph& g, int c, Mode mode);

struct SolveResult {
    enum class Status { Found, Absent, Timeout };
    Status status;
    std::optional<PartialColoring> witness;
};
SolveResult solve_budgeted(const Graph& g, int c, Mode mode,
                           std::chrono::milliseconds budget);

// Least c admitting a coloring in the given mode. Edgeless graphs need one
// color, the null graph none.
int chi(const Graph& g, Mode mode);

// Full enumeration of all c^n assignments in lexicographic order, first
// witness returned. Requires c^n <= 10^8.
std::optional<PartialColoring> brute_oracle(const Graph& g, int c, Mode mode);

// Y = {v} together with its 1- and 2-neighbors (and 3-neighbors for the
// deg-3 variant): the deletion sets of the extension lemmas.
std::vector<int> lemma_deletion_set(const Graph& g, int v, bool include_deg3);

}  // namespace oddlab

#endif
