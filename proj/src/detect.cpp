#include <algorithm>
#include <set>
#include <stdexcept>

#include "oddlab/structures.hpp"

namespace oddlab {

namespace {

void find_1_vertices(const Graph& g, const std::string& rule,
                     std::vector<ConfigurationFinding>& out) {
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 1) out.push_back({rule, {v}, {}});
}

void find_adjacent_2_vertices(const Graph& g, const std::string& rule,
                              std::vector<ConfigurationFinding>& out) {
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) != 2) continue;
        for (int w : g.neighbors(v))
            if (v < w && g.degree(w) == 2) out.push_back({rule, {v, w}, {}});
    }
}

void find_2_vertex_in_triangle(const Graph& g, const std::string& rule,
                               std::vector<ConfigurationFinding>& out) {
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) != 2) continue;
        int a = g.neighbors(v)[0], b = g.neighbors(v)[1];
        if (g.has_edge(a, b)) out.push_back({rule, {v, a, b}, {}});
    }
}

// Claim "combine", statement level: adjacent 3+-vertices a, b with
// 2d(a)-n2(a)-2 <= c-1 and 2d(b)-n2(b)-2 <= c-2 force a to be a 4+-vertex and
// one of them to have no 2-neighbor. Either ordering may witness a violation.
bool combine_violated(const Graph& g, int a, int b, int c) {
    DegStats sa = deg_stats(g, a), sb = deg_stats(g, b);
    if (sa.d < 3 || sb.d < 3) return false;
    if (2 * sa.d - sa.n2 - 2 > c - 1) return false;
    if (2 * sb.d - sb.n2 - 2 > c - 2) return false;
    return sa.d == 3 || (sa.n2 >= 1 && sb.n2 >= 1);
}

std::vector<ConfigurationFinding> detect_pcf(const Graph& g, int c) {
    if (c < 5) throw std::invalid_argument("detect_reducible: PcfC needs c >= 5");
    std::vector<ConfigurationFinding> out;
    find_1_vertices(g, "pcf:no-1-vertex", out);
    find_adjacent_2_vertices(g, "pcf:no-adjacent-2-vertices", out);
    find_2_vertex_in_triangle(g, "pcf:no-2-vertex-in-triangle", out);
    for (int v = 0; v < g.n(); ++v) {
        DegStats s = deg_stats(g, v);
        // Claim 2.5: a 3-vertex with a 2-neighbor only survives c = 5, n2 = 1.
        if (s.d == 3 && s.n2 >= 1 && !(c == 5 && s.n2 == 1))
            out.push_back({"pcf:deg3-2-neighbor", {v}, {}});
        if (s.n1 + s.n2 >= 1 && lemma_bound(g, v, LemmaKind::Pcf) < c)
            out.push_back({"pcf:lemma-bound", {v}, {}});
        if (c >= 7 && s.n1 + s.n2 + s.n3 >= 1 && lemma_bound(g, v, LemmaKind::Pcf3) < c)
            out.push_back({"pcf:lemma-bound-deg3", {v}, {}});
        for (int w : g.neighbors(v))
            if (combine_violated(g, v, w, c))
                out.push_back({"pcf:combine", {v, w}, {}});
    }
    return out;
}

std::vector<ConfigurationFinding> detect_oddmad(const Graph& g, int c) {
    if (c < 5) throw std::invalid_argument("detect_reducible: OddMadC needs c >= 5");
    std::vector<ConfigurationFinding> out;
    find_1_vertices(g, "oddmad:no-1-vertex", out);
    find_adjacent_2_vertices(g, "oddmad:no-adjacent-2-vertices", out);
    for (int v = 0; v < g.n(); ++v) {
        DegStats s = deg_stats(g, v);
        if (s.d == 3) {
            int noneasy4p = 0;
            for (int w : g.neighbors(v))
                if (g.degree(w) >= 4 && !is_easy(g, w)) ++noneasy4p;
            if (c >= 7 || noneasy4p < 2 || (c == 6 && s.n2 + s.ne >= 1))
                out.push_back({"oddmad:deg3-non-easy", {v}, {}});
        }
        bool hypothesis = s.d % 2 == 1 || s.n1 + s.n2 >= 1;
        if (hypothesis && lemma_bound(g, v, LemmaKind::Odd) < c)
            out.push_back({"oddmad:lemma-bound", {v}, {}});
    }
    return out;
}

std::vector<ConfigurationFinding> detect_odd4(const Graph& g) {
    std::vector<ConfigurationFinding> out;
    find_1_vertices(g, "odd4:no-1-vertex", out);

    auto bd = blocks(g);
    for (int b : end_blocks(g, bd)) {
        const auto& blk = bd.blocks[b];
        for (int len : {3, 4, 5})
            if (block_is_cycle(g, blk, len))
                out.push_back({len == 5 ? "odd4:end-block-5-cycle" : "odd4:end-block-small-cycle",
                               blk,
                               {}});
    }

    auto td = threads(g);
    for (const auto& t : td.threads())
        if (t.length() >= 4) out.push_back({"odd4:4-thread", t.vertices, {}});

    for (int v = 0; v < g.n(); ++v) {
        int d = g.degree(v);
        DegStats s = deg_stats(g, v);
        if (d % 2 == 1 && td.adjacent_to_thread(v, 2))
            out.push_back({"odd4:odd-degree-at-2-thread", {v}, {}});
        if (d == 3 && s.n2 == 3) out.push_back({"odd4:deg3-three-2-neighbors", {v}, {}});

        if (d >= 4) {
            int two_threads = 0, has_3thread = 0;
            for (auto [t, front] : td.ends_at(v)) {
                (void)front;
                int len = td.threads()[t].length();
                if (len >= 2) ++two_threads;
                if (len >= 3) has_3thread = 1;
            }
            if (s.n2 == d && two_threads > d - 2)
                out.push_back({"odd4:2-thread-overload", {v}, {}});
            if (has_3thread &&
                two_threads - 1 > d - 4 + std::min(s.d - s.n1 - s.n2, 1))
                out.push_back({"odd4:3-thread-overload", {v}, {}});
            int close = (int)close_two_vertices(g, td, v).size();
            int cap = d % 2 == 1 ? d : 3 * d - 5;
            if (close > cap) out.push_back({"odd4:close-overload", {v}, {}});
        }
    }
    return out;
}

std::vector<ConfigurationFinding> detect_planar6(const PlaneGraph& pg) {
    const Graph& g = pg.graph();
    std::vector<ConfigurationFinding> out;
    find_1_vertices(g, "planar6:no-1-vertex", out);

    auto td = threads(g);
    for (const auto& t : td.threads())
        if (t.length() >= 2) out.push_back({"planar6:2-thread", t.vertices, {}});

    find_2_vertex_in_triangle(g, "planar6:no-2-vertex-in-triangle", out);

    for (int v = 0; v < g.n(); ++v) {
        DegStats s = deg_stats(g, v);
        if (s.d == 3) {
            bool bad = s.n2 >= 1;
            for (int w : g.neighbors(v))
                if (is_easy(g, w)) bad = true;
            if (bad) out.push_back({"planar6:deg3-bad-neighbor", {v}, {}});
        }
        if (s.d == 4 && s.n2 >= 3)
            out.push_back({"planar6:deg4-three-2-neighbors", {v}, {}});
        if (is_easy(g, v))
            for (int w : g.neighbors(v))
                if (v < w && is_easy(g, w))
                    out.push_back({"planar6:adjacent-easy", {v, w}, {}});
    }

    for (int f = 0; f < pg.face_count(); ++f) {
        int d = pg.face_degree(f);
        if (d != 4 && d != 5) continue;
        std::set<int> small, two;
        for (int v : pg.face(f)) {
            if (g.degree(v) <= 3) small.insert(v);
            if (g.degree(v) == 2) two.insert(v);
        }
        if (!two.empty() && small.size() >= 2)
            out.push_back({"planar6:45face-3minus", std::vector<int>(small.begin(), small.end()),
                           {f}});
    }
    return out;
}

}  // namespace

std::vector<ConfigurationFinding> detect_reducible(const Graph& g, Context ctx, int c) {
    switch (ctx) {
        case Context::PcfC: return detect_pcf(g, c);
        case Context::OddMadC: return detect_oddmad(g, c);
        case Context::Odd4: return detect_odd4(g);
        case Context::PlanarOdd6:
            throw std::invalid_argument("detect_reducible: PlanarOdd6 needs a PlaneGraph");
    }
    return {};
}

std::vector<ConfigurationFinding> detect_reducible(const PlaneGraph& pg, Context ctx, int c) {
    if (ctx == Context::PlanarOdd6) return detect_planar6(pg);
    return detect_reducible(pg.graph(), ctx, c);
}

namespace {

bool matches(const std::vector<ConfigurationFinding>& all, const ConfigurationFinding& f) {
    for (const auto& g : all)
        if (g.rule == f.rule && g.vertices == f.vertices && g.faces == f.faces) return true;
    return false;
}

}  // namespace

bool revalidate_finding(const Graph& g, const ConfigurationFinding& f, Context ctx, int c) {
    return matches(detect_reducible(g, ctx, c), f);
}

bool revalidate_finding(const PlaneGraph& pg, const ConfigurationFinding& f, Context ctx,
                        int c) {
    return matches(detect_reducible(pg, ctx, c), f);
}

}  // namespace oddlab
