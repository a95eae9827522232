#include "maxflow.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace oddlab {

void MaxFlow::add_edge(int from, int to, long long cap) {
    adj_[from].push_back({to, cap, (int)adj_[to].size()});
    adj_[to].push_back({from, 0, (int)adj_[from].size() - 1});
}

bool MaxFlow::bfs(int s, int t) {
    level_.assign(adj_.size(), -1);
    std::deque<int> q{s};
    level_[s] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (const Arc& a : adj_[u]) {
            if (a.cap > 0 && level_[a.to] == -1) {
                level_[a.to] = level_[u] + 1;
                q.push_back(a.to);
            }
        }
    }
    return level_[t] != -1;
}

long long MaxFlow::dfs(int u, int t, long long pushed) {
    if (u == t) return pushed;
    for (int& i = iter_[u]; i < (int)adj_[u].size(); ++i) {
        Arc& a = adj_[u][i];
        if (a.cap > 0 && level_[a.to] == level_[u] + 1) {
            long long d = dfs(a.to, t, std::min(pushed, a.cap));
            if (d > 0) {
                a.cap -= d;
                adj_[a.to][a.rev].cap += d;
                return d;
            }
        }
    }
    return 0;
}

long long MaxFlow::run(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
        iter_.assign(adj_.size(), 0);
        while (long long d = dfs(s, t, std::numeric_limits<long long>::max())) flow += d;
    }
    return flow;
}

std::vector<char> MaxFlow::min_cut_side(int s) const {
    std::vector<char> side(adj_.size(), 0);
    std::deque<int> q{s};
    side[s] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (const Arc& a : adj_[u]) {
            if (a.cap > 0 && !side[a.to]) {
                side[a.to] = 1;
                q.push_back(a.to);
            }
        }
    }
    return side;
}

}  // namespace oddlab
