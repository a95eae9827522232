#include "oddlab/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace oddlab {

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) es.emplace_back(u, v);
    return es;
}

std::pair<Graph, std::vector<int>> Graph::induced(const std::vector<int>& keep) const {
    std::vector<int> old_ids(keep);
    std::sort(old_ids.begin(), old_ids.end());
    old_ids.erase(std::unique(old_ids.begin(), old_ids.end()), old_ids.end());
    std::vector<int> new_id(n_, -1);
    for (int i = 0; i < (int)old_ids.size(); ++i) new_id[old_ids[i]] = i;
    std::vector<std::pair<int, int>> es;
    for (int u : old_ids)
        for (int v : adj_[u])
            if (u < v && new_id[v] >= 0) es.emplace_back(new_id[u], new_id[v]);
    return {from_edges((int)old_ids.size(), es), old_ids};
}

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& a = g.adj_[v];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
    }
    g.m_ = (int)edges.size();
    return g;
}

Multigraph::Multigraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)), deg_(n, 0) {
    for (auto& [u, v] : edges_) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("multigraph edge endpoint out of range");
        if (u == v) throw std::invalid_argument("multigraph loop rejected");
        if (u > v) std::swap(u, v);
        ++deg_[u];
        ++deg_[v];
    }
    std::sort(edges_.begin(), edges_.end());
}

bool Multigraph::regular(int r) const {
    for (int v = 0; v < n_; ++v)
        if (deg_[v] != r) return false;
    return true;
}

bool Multigraph::connected() const {
    if (n_ == 0) return true;
    std::vector<std::vector<int>> adj(n_);
    for (auto [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                stack.push_back(w);
            }
    }
    return cnt == n_;
}

Graph Multigraph::simplify() const {
    auto es = edges_;
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return from_edges(n_, es);
}

bool is_connected(const Graph& g) {
    return components(g).size() <= 1;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

long long degree_sum(const Graph& g) {
    long long s = 0;
    for (int v = 0; v < g.n(); ++v) s += g.degree(v);
    return s;
}

}  // namespace oddlab
