#include "oddlab/threads.hpp"

#include <algorithm>

namespace oddlab {

ThreadDecomposition::ThreadDecomposition(std::vector<Thread> threads, int n)
    : threads_(std::move(threads)), owner_(n, -1) {
    for (int t = 0; t < (int)threads_.size(); ++t)
        for (int v : threads_[t].vertices) owner_[v] = t;
}

std::vector<std::pair<int, bool>> ThreadDecomposition::ends_at(int v) const {
    std::vector<std::pair<int, bool>> out;
    for (int t = 0; t < (int)threads_.size(); ++t) {
        if (threads_[t].front_anchor == v) out.push_back({t, true});
        if (threads_[t].back_anchor == v) out.push_back({t, false});
    }
    return out;
}

bool ThreadDecomposition::adjacent_to_thread(int v, int ell) const {
    for (auto [t, front] : ends_at(v))
        if (threads_[t].length() >= ell) return true;
    return false;
}

ThreadDecomposition threads(const Graph& g) {
    std::vector<Thread> out;
    std::vector<char> seen(g.n(), 0);
    auto is2 = [&](int v) { return g.degree(v) == 2; };

    for (int s = 0; s < g.n(); ++s) {
        if (!is2(s) || seen[s]) continue;
        // Walk from s in one direction until a non-2-vertex or back to s.
        Thread th;
        int start = s;
        std::optional<int> front;
        {
            int prev = -1, cur = s;
            while (is2(cur)) {
                int nxt = -1;
                for (int w : g.neighbors(cur))
                    if (w != prev) nxt = w;
                if (nxt == -1) break;  // path of 2-vertices ending at degree-1... cannot: deg 2
                prev = cur;
                cur = nxt;
                if (cur == s) { th.cyclic = true; break; }
            }
            if (!th.cyclic && !is2(cur)) { start = prev; front = cur; }
        }
        if (th.cyclic) {
            // Collect the whole cycle starting at s.
            int prev = -1, cur = s;
            do {
                th.vertices.push_back(cur);
                seen[cur] = 1;
                int nxt = -1;
                for (int w : g.neighbors(cur))
                    if (w != prev) { nxt = w; break; }
                prev = cur;
                cur = nxt;
            } while (cur != s);
        } else {
            // Walk from `start` away from the front anchor.
            int prev = front.value_or(-1), cur = start;
            th.front_anchor = front;
            while (cur != -1 && is2(cur)) {
                th.vertices.push_back(cur);
                seen[cur] = 1;
                int nxt = -1;
                for (int w : g.neighbors(cur))
                    if (w != prev) nxt = w;
                prev = cur;
                cur = nxt;
            }
            if (cur != -1) th.back_anchor = cur;
            // Orientation normalized so representations are deterministic.
            if (th.vertices.front() > th.vertices.back()) {
                std::reverse(th.vertices.begin(), th.vertices.end());
                std::swap(th.front_anchor, th.back_anchor);
            }
        }
        out.push_back(std::move(th));
    }
    return ThreadDecomposition(std::move(out), g.n());
}

int max_thread_length(const ThreadDecomposition& td) {
    int best = 0;
    for (const auto& t : td.threads()) best = std::max(best, t.length());
    return best;
}

}  // namespace oddlab
