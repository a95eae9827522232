#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "oddlab/coloring.hpp"

namespace oddlab {

namespace {

class Backtracker {
public:
    Backtracker(const Graph& g, int c, Mode mode,
                std::optional<std::chrono::steady_clock::time_point> deadline)
        : g_(g), c_(c), mode_(mode), deadline_(deadline), order_(g.n()),
          color_(g.n(), 0), cnt_(g.n(), std::vector<int>(c + 1, 0)),
          colored_nbrs_(g.n(), 0), ones_(g.n(), 0), odds_(g.n(), 0) {
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
    }

    SolveResult run() {
        if (search(0, 0)) {
            PartialColoring phi(g_.n(), c_);
            for (int v = 0; v < g_.n(); ++v) phi.set(v, color_[v]);
            return {SolveResult::Status::Found, phi};
        }
        if (timed_out_) return {SolveResult::Status::Timeout, std::nullopt};
        return {SolveResult::Status::Absent, std::nullopt};
    }

private:
    // Condition of a vertex whose neighborhood just became fully colored. The
    // odd/PCF requirement involves only neighbor colors, so it is decided here
    // regardless of whether the vertex itself is colored yet.
    bool completed_ok(int w) const {
        if (mode_ == Mode::Proper || g_.degree(w) == 0) return true;
        return mode_ == Mode::Odd ? odds_[w] >= 1 : ones_[w] >= 1;
    }

    bool place(int u, int col) {
        bool ok = true;
        for (int w : g_.neighbors(u)) {
            int& k = cnt_[w][col];
            ones_[w] -= (k == 1);
            odds_[w] += (k % 2 == 0) ? 1 : -1;
            ++k;
            ones_[w] += (k == 1);
            if (++colored_nbrs_[w] == g_.degree(w) && !completed_ok(w)) ok = false;
        }
        color_[u] = col;
        return ok;
    }

    void remove(int u, int col) {
        for (int w : g_.neighbors(u)) {
            int& k = cnt_[w][col];
            ones_[w] -= (k == 1);
            --k;
            ones_[w] += (k == 1);
            odds_[w] += (k % 2 == 0) ? -1 : 1;
            --colored_nbrs_[w];
        }
        color_[u] = 0;
    }

    bool search(int pos, int max_used) {
        if (deadline_ && (++nodes_ & 511) == 0 &&
            std::chrono::steady_clock::now() > *deadline_) {
            timed_out_ = true;
            return false;
        }
        if (pos == g_.n()) return true;
        int u = order_[pos];
        int limit = std::min(c_, max_used + 1);  // colors appear in first-use order
        for (int col = 1; col <= limit; ++col) {
            if (cnt_[u][col] > 0) continue;  // a colored neighbor already uses col
            bool viable = place(u, col);
            if (viable && search(pos + 1, std::max(max_used, col))) return true;
            remove(u, col);
            if (timed_out_) return false;
        }
        return false;
    }

    const Graph& g_;
    int c_;
    Mode mode_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::vector<int> order_, color_;
    std::vector<std::vector<int>> cnt_;
    std::vector<int> colored_nbrs_, ones_, odds_;
    long long nodes_ = 0;
    bool timed_out_ = false;
};

}  // namespace

std::optional<PartialColoring> solve(const Graph& g, int c, Mode mode) {
    if (c < 1) throw std::invalid_argument("solve: c < 1");
    return Backtracker(g, c, mode, std::nullopt).run().witness;
}

SolveResult solve_budgeted(const Graph& g, int c, Mode mode,
                           std::chrono::milliseconds budget) {
    if (c < 1) throw std::invalid_argument("solve: c < 1");
    auto deadline = std::chrono::steady_clock::now() + budget;
    return Backtracker(g, c, mode, deadline).run();
}

}  // namespace oddlab
