#include "oddlab/blocks.hpp"

#include <algorithm>
#include <set>

namespace oddlab {

namespace {

struct Tarjan {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> stack;
    std::vector<std::vector<int>> blocks;
    std::set<int> cuts;
    int timer = 0;

    explicit Tarjan(const Graph& gr) : g(gr), disc(gr.n(), -1), low(gr.n(), 0) {}

    void pop_block(std::pair<int, int> until) {
        std::set<int> verts;
        while (true) {
            auto e = stack.back();
            stack.pop_back();
            verts.insert(e.first);
            verts.insert(e.second);
            if (e == until) break;
        }
        blocks.emplace_back(verts.begin(), verts.end());
    }

    void dfs(int u, int parent_edge_to) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (int w : g.neighbors(u)) {
            if (disc[w] == -1) {
                ++children;
                stack.push_back({u, w});
                dfs(w, u);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    if (parent_edge_to != -1 || children > 1) cuts.insert(u);
                    pop_block({u, w});
                }
            } else if (w != parent_edge_to && disc[w] < disc[u]) {
                stack.push_back({u, w});
                low[u] = std::min(low[u], disc[w]);
            }
        }
    }
};

}  // namespace

bool BlockDecomposition::is_cut(int v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

int BlockDecomposition::blocks_at(int v) const {
    int c = 0;
    for (const auto& b : blocks)
        if (std::binary_search(b.begin(), b.end(), v)) ++c;
    return c;
}

BlockDecomposition blocks(const Graph& g) {
    Tarjan t(g);
    for (int v = 0; v < g.n(); ++v)
        if (t.disc[v] == -1 && g.degree(v) > 0) t.dfs(v, -1);
    BlockDecomposition bd;
    bd.blocks = std::move(t.blocks);
    bd.cut_vertices.assign(t.cuts.begin(), t.cuts.end());
    std::sort(bd.blocks.begin(), bd.blocks.end());
    return bd;
}

bool block_is_cycle(const Graph& g, const std::vector<int>& block, int k) {
    if ((int)block.size() != k) return false;
    int edges = 0;
    for (size_t i = 0; i < block.size(); ++i)
        for (size_t j = i + 1; j < block.size(); ++j)
            if (g.has_edge(block[i], block[j])) ++edges;
    return edges == k;
}

std::vector<int> end_blocks(const Graph& g, const BlockDecomposition& bd) {
    (void)g;
    std::vector<int> out;
    for (int b = 0; b < (int)bd.blocks.size(); ++b) {
        int cuts = 0;
        for (int v : bd.blocks[b])
            if (bd.is_cut(v)) ++cuts;
        if (cuts <= 1) out.push_back(b);
    }
    return out;
}

}  // namespace oddlab
