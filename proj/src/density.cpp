#include "oddlab/density.hpp"

#include <bit>
#include <optional>
#include <stdexcept>

#include "maxflow.hpp"

namespace oddlab {

namespace {

// Decides "exists H with |E(H)|/|V(H)| > g" by one min cut on the edge-node
// network, capacities scaled to integers by the denominator of g. On success
// returns the witness subgraph (source side of the cut).
std::optional<std::vector<int>> denser_than(const Graph& g, const Rational& bound) {
    const auto edges = g.edges();
    const int m = (int)edges.size(), n = g.n();
    if (m == 0) return std::nullopt;
    const long long D = bound.den(), N = bound.num();
    if (N < 0) {
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        return all;
    }
    // Nodes: 0 = source, 1..m = edge nodes, m+1..m+n = vertices, m+n+1 = sink.
    const int src = 0, snk = m + n + 1;
    const long long inf = (long long)m * D + 1;
    MaxFlow flow(m + n + 2);
    for (int e = 0; e < m; ++e) {
        flow.add_edge(src, 1 + e, D);
        flow.add_edge(1 + e, m + 1 + edges[e].first, inf);
        flow.add_edge(1 + e, m + 1 + edges[e].second, inf);
    }
    for (int v = 0; v < n; ++v) flow.add_edge(m + 1 + v, snk, N);
    long long value = flow.run(src, snk);
    if (value >= (long long)m * D) return std::nullopt;
    auto side = flow.min_cut_side(src);
    std::vector<int> subgraph;
    for (int v = 0; v < n; ++v)
        if (side[m + 1 + v]) subgraph.push_back(v);
    return subgraph;
}

}  // namespace

Rational subset_density(const Graph& g, const std::vector<int>& subset) {
    if (subset.empty()) throw std::invalid_argument("density of empty subset");
    long long edges = 0;
    for (size_t i = 0; i < subset.size(); ++i)
        for (size_t j = i + 1; j < subset.size(); ++j)
            if (g.has_edge(subset[i], subset[j])) ++edges;
    return Rational(edges, (long long)subset.size());
}

DensityCertificate densest_subgraph(const Graph& g) {
    const int n = g.n();
    if (n == 0) throw std::invalid_argument("densest_subgraph: empty graph");

    std::vector<int> best(n);
    for (int v = 0; v < n; ++v) best[v] = v;
    Rational lo = Rational(g.m(), n);  // achieved by the whole graph
    Rational hi = Rational(n - 1, 2);  // no simple graph is denser
    const Rational gap(1, (long long)n * n);  // distinct densities differ by >= 1/n^2

    while (hi - lo >= gap) {
        Rational mid = (lo + hi) * Rational(1, 2);
        if (auto witness = denser_than(g, mid)) {
            best = std::move(*witness);
            lo = subset_density(g, best);
        } else {
            hi = mid;
        }
    }
    return {std::move(best), lo};
}

Rational mad_exact(const Graph& g) {
    return densest_subgraph(g).density * Rational(2);
}

bool mad_at_most(const Graph& g, const Rational& bound) {
    if (bound < Rational(0)) throw std::invalid_argument("mad_at_most: negative bound");
    if (g.n() == 0) return true;
    return !denser_than(g, bound * Rational(1, 2)).has_value();
}

Rational mad_brute(const Graph& g) {
    const int n = g.n();
    if (n == 0) throw std::invalid_argument("mad_brute: empty graph");
    if (n > 20) throw std::invalid_argument("mad_brute: n > 20");

    std::vector<uint32_t> mask(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v))
            if (w < v) mask[v] |= 1u << w;

    long long best_e = 0, best_v = 1;
    for (uint32_t s = 1; s < (1u << n); ++s) {
        long long e = 0;
        for (uint32_t rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            e += std::popcount(mask[v] & s);
        }
        int k = std::popcount(s);
        if (e * best_v > best_e * k) {
            best_e = e;
            best_v = k;
        }
    }
    return Rational(2 * best_e, best_v);
}

}  // namespace oddlab
