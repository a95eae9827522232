#ifndef ODDLAB_DENSITY_HPP
#define ODDLAB_DENSITY_HPP

#include <vector>

#include "oddlab/graph.hpp"
#include "oddlab/rational.hpp"

namespace oddlab {

struct DensityCertificate {
    std::vector<int> subgraph;  // sorted vertex set realizing the density
    Rational density;           // |E(H)| / |V(H)|, exact
};

// Maximum |E(H)|/|V(H)| over non-empty vertex subsets, located by rational
// bisection over one max-flow decision per step. Rejects the empty graph.
DensityCertificate densest_subgraph(const Graph& g);

// mad(G) = 2 * densest density. Rejects the empty graph.
Rational mad_exact(const Graph& g);

// Single flow decision, no search: mad(G) <= bound?
bool mad_at_most(const Graph& g, const Rational& bound);

// Exhaustive subset oracle, n <= 20. Independent of the flow path.
Rational mad_brute(const Graph& g);

// Exact |E(H)| / |V(H)| of an induced subgraph.
Rational subset_density(const Graph& g, const std::vector<int>& subset);

}  // namespace oddlab

#endif
