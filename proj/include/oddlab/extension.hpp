#ifndef ODDLAB_EXTENSION_HPP
#define ODDLAB_EXTENSION_HPP

#include "oddlab/coloring.hpp"
#include "oddlab/graph.hpp"

namespace oddlab {

// Constructive steps of the extension lemmas. Each takes a semi coloring of
// (G, Y) for the lemma's deletion set Y around v, colors Y in the proof's
// order, and returns a total coloring that passes the corresponding verdict.
// Preconditions are rejected with invalid_argument; the internal forbidden-set
// bounds (|C| <= c-1 and friends) are re-checked at runtime and a violation or
// a failed final verdict raises logic_error ("internal inconsistency").
//
// Throughout, the avoidance colors phi_*(z) / phi_o(z) follow the papers'
// working convention for partially colored neighborhoods: when z has no color
// seen exactly once but at most one distinct color among colored neighbors,
// that color is avoided; when an odd-colored neighbor of z is being recolored,
// the designated odd color is chosen among those that survive the recoloring.

// Y = {v} u N1(v) u N2(v). Requires c >= 5, a 2-neighbor at v, and
// 2d(v) - 2n1(v) - n2(v) <= c - 1. Output passes verify(Pcf).
PartialColoring extend_lemma_semi_pcf(const Graph& g, int v, const PartialColoring& phi,
                                      int c);

// Y = {v} u N1(v) u N2(v) u N3(v). Requires c >= 7, a 2- or 3-neighbor, and
// 2d(v) - 2n1(v) - n2(v) - n3(v) <= c - 1. Output passes verify(Pcf).
PartialColoring extend_lemma_semi_pcf_deg3(const Graph& g, int v,
                                           const PartialColoring& phi, int c);

// Y = {v} u N1(v) u N2(v). Requires c >= 5, odd degree or a 2--neighbor at v,
// and 2d(v) - 2n1(v) - n2(v) - ne(v) <= c - 1. Includes the final repair loop
// for easy neighbors. Output passes verify(Odd).
PartialColoring extend_lemma_semi_odd(const Graph& g, int v, const PartialColoring& phi,
                                      int c);

// Colors the subdivision of a connected c-regular multigraph (not the simple
// K_{c+1}): branch vertices get a proper c-coloring of G0 found by the exact
// solver, subdivision vertices are colored greedily with a forbidden set of at
// most 4 < c. Returns the subdivision graph (gen_subdivided numbering) and a
// coloring passing verify(mode), mode in {Odd, Pcf}.
struct SubdividedColoring {
    Graph graph;
    PartialColoring coloring;
};
SubdividedColoring color_subdivided(const Multigraph& g0, int c, Mode mode);

}  // namespace oddlab

#endif
