#ifndef ODDLAB_MAXFLOW_HPP
#define ODDLAB_MAXFLOW_HPP

#include <vector>

namespace oddlab {

// Dinic max-flow on integer capacities. Internal helper for the densest
// subgraph decision procedure.
class MaxFlow {
public:
    explicit MaxFlow(int n) : adj_(n) {}

    void add_edge(int from, int to, long long cap);
    long long run(int s, int t);

    // Source side of a min cut; call after run().
    std::vector<char> min_cut_side(int s) const;

private:
    struct Arc {
        int to;
        long long cap;
        int rev;
    };

    bool bfs(int s, int t);
    long long dfs(int u, int t, long long pushed);

    std::vector<std::vector<Arc>> adj_;
    std::vector<int> level_, iter_;
};

}  // namespace oddlab

#endif
