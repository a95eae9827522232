#include "oddlab/structures.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace oddlab {

bool is_easy(const Graph& g, int v) {
    if (g.degree(v) < 3) return false;
    if (g.degree(v) % 2 == 1) return true;
    for (int w : g.neighbors(v))
        if (g.degree(w) <= 2) return true;
    return false;
}

DegStats deg_stats(const Graph& g, int v) {
    DegStats s;
    s.d = g.degree(v);
    for (int w : g.neighbors(v)) {
        int dw = g.degree(w);
        if (dw == 1) ++s.n1;
        else if (dw == 2) ++s.n2;
        else if (dw == 3) ++s.n3;
        else ++s.n4p;
        if (is_easy(g, w)) ++s.ne;
    }
    return s;
}

int n_at_most(const Graph& g, int v, int d) {
    int c = 0;
    for (int w : g.neighbors(v))
        if (g.degree(w) <= d) ++c;
    return c;
}

int n_at_least(const Graph& g, int v, int d) {
    int c = 0;
    for (int w : g.neighbors(v))
        if (g.degree(w) >= d) ++c;
    return c;
}

// --- bad structure ------------------------------------------------------

namespace {

// Vertices whose whole neighborhood is exactly {a, b}.
bool has_pendant_pair_vertex(const Graph& g, int a, int b, int* out) {
    for (int s : g.neighbors(a)) {
        if (g.degree(s) != 2) continue;
        const auto& ns = g.neighbors(s);
        if ((ns[0] == a && ns[1] == b) || (ns[0] == b && ns[1] == a)) {
            if (out) *out = s;
            return true;
        }
    }
    return false;
}

struct BadStructureSearch {
    const Graph& g;
    int want;  // c + 1
    std::vector<int> candidates;
    std::vector<std::vector<char>> compatible;
    std::vector<int> chosen;

    bool extend(size_t from) {
        if ((int)chosen.size() == want) return true;
        for (size_t i = from; i < candidates.size(); ++i) {
            // Prune: not enough candidates left.
            if (candidates.size() - i < (size_t)(want - (int)chosen.size())) break;
            bool ok = true;
            for (int j : chosen)
                if (!compatible[j][i]) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back((int)i);
            if (extend(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<BadStructureWitness> find_bad_structure(const Graph& g, int c) {
    if (c < 4) throw std::invalid_argument("find_bad_structure: c < 4");
    BadStructureSearch search{g, c + 1, {}, {}, {}};
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) >= c) search.candidates.push_back(v);
    int k = (int)search.candidates.size();
    if (k < c + 1) return std::nullopt;
    search.compatible.assign(k, std::vector<char>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int a = search.candidates[i], b = search.candidates[j];
            bool ok = !g.has_edge(a, b) && has_pendant_pair_vertex(g, a, b, nullptr);
            search.compatible[i][j] = search.compatible[j][i] = ok;
        }
    if (!search.extend(0)) return std::nullopt;

    BadStructureWitness w;
    for (int i : search.chosen) w.branch.push_back(search.candidates[i]);
    std::sort(w.branch.begin(), w.branch.end());
    for (size_t i = 0; i < w.branch.size(); ++i)
        for (size_t j = i + 1; j < w.branch.size(); ++j) {
            int s = -1;
            has_pendant_pair_vertex(g, w.branch[i], w.branch[j], &s);
            w.subdivision[{w.branch[i], w.branch[j]}] = s;
        }
    if (!validate_bad_structure(g, c, w))
        throw std::logic_error("find_bad_structure: witness failed revalidation");
    return w;
}

bool validate_bad_structure(const Graph& g, int c, const BadStructureWitness& w) {
    if ((int)w.branch.size() != c + 1) return false;
    std::set<int> branch(w.branch.begin(), w.branch.end());
    if ((int)branch.size() != c + 1) return false;
    std::set<int> subs;
    for (size_t i = 0; i < w.branch.size(); ++i)
        for (size_t j = i + 1; j < w.branch.size(); ++j) {
            int a = w.branch[i], b = w.branch[j];
            if (g.has_edge(a, b)) return false;
            auto it = w.subdivision.find({a, b});
            if (it == w.subdivision.end()) return false;
            int s = it->second;
            if (branch.count(s) || !subs.insert(s).second) return false;
            if (g.degree(s) != 2) return false;
            const auto& ns = g.neighbors(s);
            if (!((ns[0] == a && ns[1] == b) || (ns[0] == b && ns[1] == a))) return false;
        }
    return true;
}

// --- class H ------------------------------------------------------------

std::optional<ClassHWitness> in_class_H(const Graph& g) {
    for (const auto& comp : components(g)) {
        if (comp.size() < 2) continue;
        auto [h, old_id] = g.induced(comp);
        auto bd = blocks(h);
        if (bd.blocks.empty()) continue;
        bool all_c5 = true;
        for (const auto& b : bd.blocks)
            if (!block_is_cycle(h, b, 5)) { all_c5 = false; break; }
        if (!all_c5) continue;
        ClassHWitness w;
        w.component = comp;
        for (const auto& b : bd.blocks) {
            std::vector<int> orig;
            for (int v : b) orig.push_back(old_id[v]);
            std::sort(orig.begin(), orig.end());
            w.blocks.push_back(std::move(orig));
        }
        return w;
    }
    return std::nullopt;
}

bool validate_class_H(const Graph& g, const ClassHWitness& w) {
    if (w.blocks.empty()) return false;
    auto [h, old_id] = g.induced(w.component);
    if (!is_connected(h)) return false;
    std::vector<int> new_id(g.n(), -1);
    for (int i = 0; i < (int)old_id.size(); ++i) new_id[old_id[i]] = i;
    // The claimed blocks must be exactly the block decomposition, all 5-cycles.
    auto bd = blocks(h);
    std::vector<std::vector<int>> claimed;
    for (const auto& b : w.blocks) {
        std::vector<int> local;
        for (int v : b) {
            if (v < 0 || v >= g.n() || new_id[v] < 0) return false;
            local.push_back(new_id[v]);
        }
        std::sort(local.begin(), local.end());
        if (!block_is_cycle(h, local, 5)) return false;
        claimed.push_back(std::move(local));
    }
    std::sort(claimed.begin(), claimed.end());
    return claimed == bd.blocks;
}

// --- lemma bounds and close vertices --------------------------------------

int lemma_bound(const Graph& g, int v, LemmaKind kind) {
    DegStats s = deg_stats(g, v);
    switch (kind) {
        case LemmaKind::Pcf: return 2 * s.d - 2 * s.n1 - s.n2;
        case LemmaKind::Pcf3: return 2 * s.d - 2 * s.n1 - s.n2 - s.n3;
        case LemmaKind::Odd: return 2 * s.d - 2 * s.n1 - s.n2 - s.ne;
    }
    return 0;
}

std::vector<int> close_two_vertices(const Graph& g, int v) {
    return close_two_vertices(g, threads(g), v);
}

std::vector<int> close_two_vertices(const Graph& g, const ThreadDecomposition& td, int v) {
    if (g.degree(v) < 3) throw std::invalid_argument("close_two_vertices: d(v) < 3");
    std::set<int> close;
    for (auto [t, front] : td.ends_at(v)) {
        (void)front;
        for (int u : td.threads()[t].vertices) close.insert(u);
    }
    return std::vector<int>(close.begin(), close.end());
}

int girth_threshold(int c) {
    if (c < 5) throw std::invalid_argument("girth_threshold: c < 5");
    return (4 * c + (c - 2) - 1) / (c - 2);
}

}  // namespace oddlab
