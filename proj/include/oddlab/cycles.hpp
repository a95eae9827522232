#ifndef ODDLAB_CYCLES_HPP
#define ODDLAB_CYCLES_HPP

#include <optional>
#include <vector>

#include "oddlab/plane_graph.hpp"

namespace oddlab {

// Length of a shortest cycle; absent for forests.
std::optional<int> girth(const Graph& g);

// Every simple cycle of length <= max_len, each exactly once, as canonical
// vertex sequences (least vertex first, lexicographically smaller direction).
// max_len is capped at 12 to keep the enumeration a desk-scale tool.
std::vector<std::vector<int>> short_cycles(const Graph& g, int max_len);

// True iff the two cycles are distinct and share at least one edge.
bool cycles_edge_adjacent(const std::vector<int>& c1, const std::vector<int>& c2);

// Distinct-cycle pair counts among (<=4-cycle, <=7-cycle) pairs, under the
// edge-sharing reading and the vertex-only-sharing reading. Reported side by
// side so the alternative reading of "adjacent" stays auditable.
struct CycleAdjacencyCounts {
    long long edge_sharing = 0;
    long long vertex_only_sharing = 0;
};
CycleAdjacencyCounts count_small_cycle_adjacencies(const Graph& g);

// Hypothesis of the planar odd-6 theorem: no cycle of length <= 4 shares an
// edge with a distinct cycle of length <= 7.
bool hypothesis_planar_odd6(const PlaneGraph& pg);

}  // namespace oddlab

#endif
