#ifndef ODDLAB_ENUMERATE_HPP
#define ODDLAB_ENUMERATE_HPP

#include <cstdint>
#include <functional>

#include "oddlab/graph.hpp"

namespace oddlab {

// Exhaustive edge-subset enumeration of unlabeled graphs on exactly n <= 8
// vertices, deduplicated by degree-sequence bucketing plus adjacency-bitmask
// minimization over degree-preserving relabelings. max_edges trims the subset
// lattice up front (pass n*(n-1)/2 for no trim); connected_only additionally
// drops disconnected graphs. The callback receives each graph once.
void enumerate_graphs(int n, int max_edges, bool connected_only,
                      const std::function<void(const Graph&)>& fn);

// Canonical adjacency bitmask (the dedup key), exposed for tests.
uint64_t canonical_bits(const Graph& g);

}  // namespace oddlab

#endif
