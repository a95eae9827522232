#include "oddlab/extension.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "oddlab/generators.hpp"
#include "oddlab/structures.hpp"

namespace oddlab {

namespace {

std::map<int, int> colored_neighbor_counts(const Graph& g, const PartialColoring& phi, int z) {
    std::map<int, int> cnt;
    for (int w : g.neighbors(z))
        if (phi.colored(w)) ++cnt[phi.color(w)];
    return cnt;
}

// phi_* for avoidance purposes: the least color seen exactly once, or, when z
// sees only one distinct color, that color (so the next colored neighbor of z
// hands it a PCF color).
std::optional<int> pcf_avoid(const Graph& g, const PartialColoring& phi, int z) {
    auto cnt = colored_neighbor_counts(g, phi, z);
    for (auto [color, mult] : cnt)
        if (mult == 1) return color;
    if (cnt.size() == 1) return cnt.begin()->first;
    return std::nullopt;
}

// phi_o for avoidance purposes. `vanishing` is the color about to leave z's
// neighborhood when a neighbor is recolored (0 = plain coloring step): the
// designated odd color is picked among those that stay odd afterwards, and
// when z would end with all-even counts the vanishing color itself is
// designated so the recoloring is forced to change it.
std::optional<int> odd_avoid(const Graph& g, const PartialColoring& phi, int z,
                             int vanishing = 0) {
    auto cnt = colored_neighbor_counts(g, phi, z);
    if (vanishing) --cnt[vanishing];
    for (auto [color, mult] : cnt)
        if (mult % 2 == 1) return color;
    return std::nullopt;
}

int least_color_not_in(const std::set<int>& forbidden, int c) {
    for (int color = 1; color <= c; ++color)
        if (!forbidden.count(color)) return color;
    throw std::logic_error("internal inconsistency: palette exhausted");
}

void check_bound(size_t size, int c, const char* what) {
    if ((int)size > c - 1)
        throw std::logic_error(std::string("internal inconsistency: |") + what +
                               "| exceeds c-1");
}

void insert_colored(std::set<int>& out, const PartialColoring& phi, const std::vector<int>& vs) {
    for (int v : vs)
        if (phi.colored(v)) out.insert(phi.color(v));
}

// Shared skeleton of the two PCF lemmas. `low` is the degree threshold of the
// deletion set (2 for Lemma-style Y = {v} u N1 u N2, 3 for the c >= 7 variant).
PartialColoring extend_pcf(const Graph& g, int v, const PartialColoring& phi_in, int c,
                           int low) {
    if (c < (low == 2 ? 5 : 7)) throw std::invalid_argument("extension: c too small");
    if (phi_in.palette() != c) throw std::invalid_argument("extension: palette mismatch");
    DegStats s = deg_stats(g, v);
    int residue = low == 2 ? lemma_bound(g, v, LemmaKind::Pcf)
                           : lemma_bound(g, v, LemmaKind::Pcf3);
    bool trigger = low == 2 ? s.n2 >= 1 : s.n2 + s.n3 >= 1;
    if (!trigger)
        throw std::invalid_argument("extension: v has no neighbor of the required degree");
    if (residue > c - 1) throw std::invalid_argument("extension: lemma bound not met");

    std::vector<int> y = lemma_deletion_set(g, v, low == 3);
    if (!verify_semi_pcf(g, y, phi_in).ok)
        throw std::invalid_argument("extension: coloring is not semi-PCF for (G, Y)");
    std::set<int> in_y(y.begin(), y.end());

    PartialColoring phi = phi_in;
    std::vector<int> high_nbrs, low_nbrs;  // N_{low+1,+}(v) and N_1..low(v)
    for (int w : g.neighbors(v)) {
        if (g.degree(w) <= low) low_nbrs.push_back(w);
        else high_nbrs.push_back(w);
    }

    // X: for x in N2(v) (resp. N2 u N3), one designated neighbor outside Y.
    std::set<int> x_set;
    for (int x : low_nbrs) {
        if (g.degree(x) < 2) continue;
        for (int w : g.neighbors(x))
            if (w != v && !in_y.count(w)) { x_set.insert(w); break; }
    }

    // Color v.
    std::set<int> forbidden;
    insert_colored(forbidden, phi, std::vector<int>(x_set.begin(), x_set.end()));
    insert_colored(forbidden, phi, high_nbrs);
    for (int z : high_nbrs)
        if (auto a = pcf_avoid(g, phi, z)) forbidden.insert(*a);
    check_bound(forbidden.size(), c, "C");
    phi.set(v, least_color_not_in(forbidden, c));

    // Color the low-degree neighbors, first one with the extra guard when v
    // still has no PCF color.
    for (size_t i = 0; i < low_nbrs.size(); ++i) {
        int u = low_nbrs[i];
        std::set<int> avoid;
        insert_colored(avoid, phi, g.neighbors(u));
        for (int z : g.neighbors(u))
            if (phi.colored(z))
                if (auto a = pcf_avoid(g, phi, z)) avoid.insert(*a);
        if (i == 0 && !pcf_color_of(g, phi, v)) {
            insert_colored(avoid, phi, high_nbrs);
            check_bound(avoid.size(), c, "C0");
        }
        check_bound(avoid.size(), c, "forbidden set");
        phi.set(u, least_color_not_in(avoid, c));
    }

    if (!phi.total() || !verify(g, phi, VerdictKind::Pcf).ok)
        throw std::logic_error("internal inconsistency: extension output is not PCF");
    return phi;
}

}  // namespace

PartialColoring extend_lemma_semi_pcf(const Graph& g, int v, const PartialColoring& phi,
                                      int c) {
    return extend_pcf(g, v, phi, c, 2);
}

PartialColoring extend_lemma_semi_pcf_deg3(const Graph& g, int v,
                                           const PartialColoring& phi, int c) {
    return extend_pcf(g, v, phi, c, 3);
}

PartialColoring extend_lemma_semi_odd(const Graph& g, int v, const PartialColoring& phi_in,
                                      int c) {
    if (c < 5) throw std::invalid_argument("extension: c < 5");
    if (phi_in.palette() != c) throw std::invalid_argument("extension: palette mismatch");
    DegStats s = deg_stats(g, v);
    if (s.d % 2 == 0 && s.n1 + s.n2 == 0)
        throw std::invalid_argument("extension: v has even degree and no 2--neighbor");
    if (lemma_bound(g, v, LemmaKind::Odd) > c - 1)
        throw std::invalid_argument("extension: lemma bound not met");

    std::vector<int> y = lemma_deletion_set(g, v, false);
    if (!verify_semi_odd(g, y, phi_in).ok)
        throw std::invalid_argument("extension: coloring is not semi-odd for (G, Y)");
    std::set<int> in_y(y.begin(), y.end());

    PartialColoring phi = phi_in;
    std::vector<int> high_nbrs, two_nbrs, one_nbrs, easy_nbrs;
    for (int w : g.neighbors(v)) {
        if (g.degree(w) == 1) one_nbrs.push_back(w);
        else if (g.degree(w) == 2) two_nbrs.push_back(w);
        else high_nbrs.push_back(w);
        if (is_easy(g, w)) easy_nbrs.push_back(w);
    }

    std::set<int> x_set;
    for (int x : two_nbrs)
        for (int w : g.neighbors(x))
            if (w != v && !in_y.count(w)) x_set.insert(w);

    // Color v, protecting designated odd colors of non-easy 3+-neighbors only;
    // easy ones are repaired at the end.
    std::set<int> forbidden;
    insert_colored(forbidden, phi, std::vector<int>(x_set.begin(), x_set.end()));
    insert_colored(forbidden, phi, high_nbrs);
    for (int z : high_nbrs)
        if (!is_easy(g, z))
            if (auto a = odd_avoid(g, phi, z)) forbidden.insert(*a);
    check_bound(forbidden.size(), c, "C");
    phi.set(v, least_color_not_in(forbidden, c));

    for (int u : two_nbrs) {
        std::set<int> avoid;
        insert_colored(avoid, phi, g.neighbors(u));
        for (int z : g.neighbors(u))
            if (phi.colored(z))
                if (auto a = odd_avoid(g, phi, z)) avoid.insert(*a);
        check_bound(avoid.size(), c, "forbidden set");
        phi.set(u, least_color_not_in(avoid, c));
    }
    for (int u : one_nbrs) {
        std::set<int> avoid{phi.color(v)};
        if (auto a = odd_avoid(g, phi, v)) avoid.insert(*a);
        phi.set(u, least_color_not_in(avoid, c));
    }

    // Repair easy neighbors left without an odd color: recolor one of their
    // 2--neighbors.
    for (int u : easy_nbrs) {
        if (odd_color_of(g, phi, u)) continue;
        int x = -1;
        for (int w : g.neighbors(u))
            if (g.degree(w) <= 2) { x = w; break; }
        if (x == -1) throw std::logic_error("internal inconsistency: unrepairable easy vertex");
        int old = phi.color(x);
        std::set<int> avoid{old};
        insert_colored(avoid, phi, g.neighbors(x));
        for (int z : g.neighbors(x))
            if (auto a = odd_avoid(g, phi, z, old)) avoid.insert(*a);
        check_bound(avoid.size(), c, "repair set");
        phi.unset(x);
        phi.set(x, least_color_not_in(avoid, c));
    }

    if (!phi.total() || !verify(g, phi, VerdictKind::Odd).ok)
        throw std::logic_error("internal inconsistency: extension output is not odd");
    return phi;
}

SubdividedColoring color_subdivided(const Multigraph& g0, int c, Mode mode) {
    if (mode == Mode::Proper) throw std::invalid_argument("color_subdivided: mode must be Odd or Pcf");
    if (c < 5) throw std::invalid_argument("color_subdivided: c < 5");
    if (!g0.regular(c)) throw std::invalid_argument("color_subdivided: G0 not c-regular");
    if (!g0.connected()) throw std::invalid_argument("color_subdivided: G0 not connected");
    Graph simple = g0.simplify();
    if (simple.n() == c + 1 && simple.m() == (c + 1) * c / 2)
        throw std::invalid_argument("color_subdivided: G0 is the simple K_{c+1}");

    // Brooks-style step, delegated to the exact solver: the simplification has
    // max degree <= c and is not K_{c+1}, so a proper c-coloring exists.
    auto base = solve(simple, c, Mode::Proper);
    if (!base) throw std::logic_error("internal inconsistency: G0 has no proper c-coloring");

    Graph g = gen_subdivided(g0);
    PartialColoring phi(g.n(), c);
    for (int v = 0; v < g0.n(); ++v) phi.set(v, base->color(v));

    for (int w = g0.n(); w < g.n(); ++w) {
        std::set<int> avoid;
        insert_colored(avoid, phi, g.neighbors(w));
        for (int z : g.neighbors(w)) {
            auto a = mode == Mode::Pcf ? pcf_avoid(g, phi, z) : odd_avoid(g, phi, z);
            if (a) avoid.insert(*a);
        }
        if ((int)avoid.size() > 4)
            throw std::logic_error("internal inconsistency: subdivision forbidden set > 4");
        phi.set(w, least_color_not_in(avoid, c));
    }

    auto kind = mode == Mode::Pcf ? VerdictKind::Pcf : VerdictKind::Odd;
    if (!verify(g, phi, kind).ok)
        throw std::logic_error("internal inconsistency: subdivided coloring failed verify");
    return {std::move(g), std::move(phi)};
}

}  // namespace oddlab
