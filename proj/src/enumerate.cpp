#include "oddlab/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace oddlab {

namespace {

// Pair slots in the fixed order (0,1), (0,2), (1,2), (0,3), ...
int pair_bit(int i, int j, const std::vector<std::vector<int>>& slot) {
    return i < j ? slot[i][j] : slot[j][i];
}

std::vector<std::vector<int>> make_slots(int n) {
    std::vector<std::vector<int>> slot(n, std::vector<int>(n, 0));
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) slot[i][j] = k++;
    return slot;
}

uint64_t bits_under(const std::vector<std::pair<int, int>>& edges,
                    const std::vector<int>& relabel,
                    const std::vector<std::vector<int>>& slot) {
    uint64_t bits = 0;
    for (auto [u, v] : edges) bits |= 1ULL << pair_bit(relabel[u], relabel[v], slot);
    return bits;
}

}  // namespace

uint64_t canonical_bits(const Graph& g) {
    int n = g.n();
    if (n > 8) throw std::invalid_argument("canonical_bits: n > 8");
    auto slot = make_slots(n);
    auto edges = g.edges();

    // Vertices sorted by decreasing degree; only permutations preserving that
    // order's degree sequence are candidates, i.e. products of permutations
    // within equal-degree classes. The candidate set is isomorphism-invariant,
    // so the minimum bitmask is a true canonical form.
    std::vector<int> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    std::vector<std::pair<int, int>> classes;  // [begin, end) in by_degree
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && g.degree(by_degree[j]) == g.degree(by_degree[i])) ++j;
        classes.push_back({i, j});
        i = j;
    }

    uint64_t best = ~0ULL;
    std::vector<int> relabel(n);
    // Odometer over per-class permutations.
    std::vector<std::vector<int>> perms(classes.size());
    for (size_t ci = 0; ci < classes.size(); ++ci) {
        perms[ci].resize(classes[ci].second - classes[ci].first);
        std::iota(perms[ci].begin(), perms[ci].end(), 0);
    }
    while (true) {
        for (size_t ci = 0; ci < classes.size(); ++ci) {
            auto [b, e] = classes[ci];
            for (int k = 0; k < e - b; ++k) relabel[by_degree[b + perms[ci][k]]] = b + k;
        }
        best = std::min(best, bits_under(edges, relabel, slot));
        size_t ci = 0;
        while (ci < classes.size() && !std::next_permutation(perms[ci].begin(), perms[ci].end()))
            ++ci;
        if (ci == classes.size()) break;
    }
    return best;
}

void enumerate_graphs(int n, int max_edges, bool connected_only,
                      const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 8) throw std::invalid_argument("enumerate_graphs: need 1 <= n <= 8");
    const int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> all_pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) all_pairs.emplace_back(i, j);

    std::unordered_set<uint64_t> seen;
    for (uint64_t mask = 0; mask < (1ULL << pairs); ++mask) {
        if (std::popcount(mask) > max_edges) continue;
        std::vector<std::pair<int, int>> edges;
        for (int b = 0; b < pairs; ++b)
            if (mask & (1ULL << b)) edges.push_back(all_pairs[b]);
        Graph g = from_edges(n, edges);
        if (connected_only && !is_connected(g)) continue;
        if (seen.insert(canonical_bits(g)).second) fn(g);
    }
}

}  // namespace oddlab
