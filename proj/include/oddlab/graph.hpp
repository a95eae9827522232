#ifndef ODDLAB_GRAPH_HPP
#define ODDLAB_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace oddlab {

// Simple undirected graph on vertices 0..n-1. Neighbor lists are sorted,
// duplicate-free, symmetric, and immutable after construction.
class Graph {
public:
    Graph() : n_(0) {}
    explicit Graph(int n) : n_(n), adj_(n) {}

    int n() const { return n_; }
    int m() const { return m_; }
    int degree(int v) const { return (int)adj_[v].size(); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    // Subgraph induced by `keep`; returns the graph plus the old-id of each
    // new vertex (new ids follow the sorted order of `keep`).
    std::pair<Graph, std::vector<int>> induced(const std::vector<int>& keep) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

    friend Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

private:
    int n_;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Builds a Graph, rejecting self-loops, duplicate edges and out-of-range ids.
Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// Loopless multigraph: parallel edges allowed, kept as an explicit edge list.
class Multigraph {
public:
    Multigraph(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    int m() const { return (int)edges_.size(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int degree(int v) const { return deg_[v]; }
    bool regular(int r) const;
    bool connected() const;

    // Forgets multiplicities.
    Graph simplify() const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;  // stored with u < v, sorted
    std::vector<int> deg_;
};

// Shared helpers.
bool is_connected(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);
long long degree_sum(const Graph& g);

}  // namespace oddlab

#endif
