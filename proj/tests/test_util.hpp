#ifndef ODDLAB_TEST_UTIL_HPP
#define ODDLAB_TEST_UTIL_HPP

#include "oddlab/generators.hpp"
#include "oddlab/graph.hpp"

namespace oddlab::test {

inline Graph c5() { return gen_cycle(5); }

inline Graph k4() {
    return from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline Graph path(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return from_edges(n, es);
}

inline Graph star(int leaves) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return from_edges(leaves + 1, es);
}

// The discharging analyses operate on counterexamples, which never contain
// isolated vertices; corpus graphs for those tests are trimmed accordingly.
inline Graph drop_isolated(const Graph& g) {
    std::vector<int> keep;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 0) keep.push_back(v);
    if (keep.empty()) return from_edges(0, {});
    return g.induced(keep).first;
}

// Seeded sparse random graph: every pair kept with probability num/den.
inline Graph random_graph(int n, uint64_t seed, int num = 1, int den = 3) {
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((int)rng.below((uint64_t)den) < num) es.emplace_back(i, j);
    return from_edges(n, es);
}

}  // namespace oddlab::test

#endif
