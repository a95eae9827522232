#ifndef ODDLAB_BLOCKS_HPP
#define ODDLAB_BLOCKS_HPP

#include <vector>

#include "oddlab/graph.hpp"

namespace oddlab {

// Block-cut decomposition. Blocks are maximal 2-connected subgraphs; a bridge
// is a 2-vertex block. Every edge lies in exactly one block; isolated vertices
// lie in none.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;  // sorted vertex sets
    std::vector<int> cut_vertices;         // sorted

    bool is_cut(int v) const;
    // Number of blocks containing v.
    int blocks_at(int v) const;
};

BlockDecomposition blocks(const Graph& g);

// A block is a k-cycle iff it has k vertices and k induced edges (2-connected
// with |E| = |V| forces a cycle).
bool block_is_cycle(const Graph& g, const std::vector<int>& block, int k);

// End-blocks contain at most one cut vertex.
std::vector<int> end_blocks(const Graph& g, const BlockDecomposition& bd);

}  // namespace oddlab

#endif
