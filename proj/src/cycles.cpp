#include "oddlab/cycles.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace oddlab {

std::optional<int> girth(const Graph& g) {
    // BFS from every vertex; a non-tree edge (u,w) closes a walk of length
    // dist(u)+dist(w)+1 that contains a cycle, and starting from a vertex on a
    // shortest cycle attains the girth exactly.
    int best = -1;
    for (int s = 0; s < g.n(); ++s) {
        std::vector<int> dist(g.n(), -1), parent(g.n(), -1);
        std::deque<int> q{s};
        dist[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : g.neighbors(u)) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else if (w != parent[u] && u < w) {
                    int len = dist[u] + dist[w] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

std::vector<std::vector<int>> short_cycles(const Graph& g, int max_len) {
    if (max_len > 12) throw std::invalid_argument("short_cycles: max_len capped at 12");
    std::vector<std::vector<int>> out;
    if (max_len < 3) return out;

    std::vector<int> path;
    std::vector<char> on_path(g.n(), 0);

    // Paths start at the cycle's least vertex s, stay above s, and close back
    // at s; requiring path[1] < path.back() picks one of the two directions.
    auto dfs = [&](auto&& self, int s, int u) -> void {
        for (int w : g.neighbors(u)) {
            if (w == s && (int)path.size() >= 3 && path[1] < path.back()) {
                out.push_back(path);
            } else if (w > s && !on_path[w] && (int)path.size() < max_len) {
                path.push_back(w);
                on_path[w] = 1;
                self(self, s, w);
                on_path[w] = 0;
                path.pop_back();
            }
        }
    };

    for (int s = 0; s < g.n(); ++s) {
        path.assign(1, s);
        dfs(dfs, s, s);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

namespace {

std::set<std::pair<int, int>> cycle_edges(const std::vector<int>& c) {
    std::set<std::pair<int, int>> es;
    for (size_t i = 0; i < c.size(); ++i) {
        int u = c[i], v = c[(i + 1) % c.size()];
        es.insert({std::min(u, v), std::max(u, v)});
    }
    return es;
}

}  // namespace

bool cycles_edge_adjacent(const std::vector<int>& c1, const std::vector<int>& c2) {
    auto e1 = cycle_edges(c1), e2 = cycle_edges(c2);
    if (e1 == e2) return false;  // same cycle
    for (const auto& e : e1)
        if (e2.count(e)) return true;
    return false;
}

CycleAdjacencyCounts count_small_cycle_adjacencies(const Graph& g) {
    auto cycles = short_cycles(g, 7);
    CycleAdjacencyCounts counts;
    for (size_t i = 0; i < cycles.size(); ++i) {
        if ((int)cycles[i].size() > 4) continue;
        for (size_t j = 0; j < cycles.size(); ++j) {
            if (i == j) continue;
            auto e1 = cycle_edges(cycles[i]), e2 = cycle_edges(cycles[j]);
            bool edge_share = false;
            for (const auto& e : e1)
                if (e2.count(e)) { edge_share = true; break; }
            if (edge_share) {
                ++counts.edge_sharing;
                continue;
            }
            std::set<int> v1(cycles[i].begin(), cycles[i].end());
            for (int v : cycles[j])
                if (v1.count(v)) { ++counts.vertex_only_sharing; break; }
        }
    }
    return counts;
}

bool hypothesis_planar_odd6(const PlaneGraph& pg) {
    auto cycles = short_cycles(pg.graph(), 7);
    for (size_t i = 0; i < cycles.size(); ++i) {
        if ((int)cycles[i].size() > 4) continue;
        for (size_t j = 0; j < cycles.size(); ++j)
            if (i != j && cycles_edge_adjacent(cycles[i], cycles[j])) return false;
    }
    return true;
}

}  // namespace oddlab
