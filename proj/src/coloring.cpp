#include "oddlab/coloring.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace oddlab {

bool PartialColoring::total() const {
    return std::find(colors_.begin(), colors_.end(), 0) == colors_.end();
}

void PartialColoring::set(int v, int color) {
    if (color < 1 || color > palette_)
        throw std::invalid_argument("color outside palette 1.." + std::to_string(palette_));
    colors_[v] = color;
}

namespace {

// Multiplicity of each color among v's colored neighbors.
std::map<int, int> neighbor_counts(const Graph& g, const PartialColoring& phi, int v) {
    std::map<int, int> cnt;
    for (int w : g.neighbors(v))
        if (phi.colored(w)) ++cnt[phi.color(w)];
    return cnt;
}

}  // namespace

std::optional<int> pcf_color_of(const Graph& g, const PartialColoring& phi, int v) {
    for (auto [color, mult] : neighbor_counts(g, phi, v))
        if (mult == 1) return color;
    return std::nullopt;
}

std::optional<OddColor> odd_color_of(const Graph& g, const PartialColoring& phi, int v) {
    std::optional<int> least;
    int count = 0;
    for (auto [color, mult] : neighbor_counts(g, phi, v))
        if (mult % 2 == 1) {
            if (!least) least = color;
            ++count;
        }
    if (!least) return std::nullopt;
    return OddColor{*least, count == 1};
}

namespace {

void check_proper(const Graph& g, const PartialColoring& phi, ColorVerdict& verdict) {
    for (int v = 0; v < g.n(); ++v)
        for (int w : g.neighbors(v))
            if (v < w && phi.colored(v) && phi.color(v) == phi.color(w))
                verdict.violations.push_back({v, "edge " + std::to_string(v) + "-" +
                                                     std::to_string(w) + " monochromatic"});
}

}  // namespace

ColorVerdict verify(const Graph& g, const PartialColoring& phi, VerdictKind kind) {
    if (kind == VerdictKind::SemiPcf || kind == VerdictKind::SemiOdd)
        throw std::invalid_argument("verify: semi kinds take an exemption set Y");
    if (!phi.total())
        throw std::invalid_argument("verify: partial coloring passed to a total check");
    ColorVerdict verdict{kind, true, {}};
    check_proper(g, phi, verdict);
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) == 0) continue;  // isolated vertices are exempt
        if (kind == VerdictKind::Odd && !odd_color_of(g, phi, v))
            verdict.violations.push_back({v, "no odd color"});
        if (kind == VerdictKind::Pcf && !pcf_color_of(g, phi, v))
            verdict.violations.push_back({v, "no color seen exactly once"});
    }
    verdict.ok = verdict.violations.empty();
    return verdict;
}

namespace {

ColorVerdict verify_semi(const Graph& g, const std::vector<int>& y,
                         const PartialColoring& phi, bool pcf) {
    ColorVerdict verdict{pcf ? VerdictKind::SemiPcf : VerdictKind::SemiOdd, true, {}};
    std::vector<char> in_y(g.n(), 0);
    for (int v : y) in_y.at(v) = 1;
    for (int v = 0; v < g.n(); ++v) {
        if (in_y[v] && phi.colored(v))
            throw std::invalid_argument("semi coloring colors a vertex of Y");
        if (!in_y[v] && !phi.colored(v))
            throw std::invalid_argument("semi coloring not total on G - Y");
    }

    // Restriction to G - Y; old vertex ids kept alongside.
    std::vector<int> rest;
    for (int v = 0; v < g.n(); ++v)
        if (!in_y[v]) rest.push_back(v);
    auto [h, old_id] = g.induced(rest);
    PartialColoring psi(h.n(), phi.palette());
    for (int i = 0; i < h.n(); ++i) psi.set(i, phi.color(old_id[i]));

    check_proper(h, psi, verdict);
    for (auto& viol : verdict.violations) viol.vertex = old_id[viol.vertex];

    for (int i = 0; i < h.n(); ++i) {
        int v = old_id[i];
        if (h.degree(i) == 0) continue;  // isolated in G - Y
        bool near_y = false;
        for (int w : g.neighbors(v))
            if (in_y[w]) near_y = true;
        bool exempt = pcf ? (near_y && h.degree(i) == 2) : near_y;
        if (exempt) continue;
        if (pcf && !pcf_color_of(h, psi, i))
            verdict.violations.push_back({v, "no PCF color within G - Y"});
        if (!pcf && !odd_color_of(h, psi, i))
            verdict.violations.push_back({v, "no odd color within G - Y"});
    }
    verdict.ok = verdict.violations.empty();
    return verdict;
}

}  // namespace

ColorVerdict verify_semi_pcf(const Graph& g, const std::vector<int>& y,
                             const PartialColoring& phi) {
    return verify_semi(g, y, phi, true);
}

ColorVerdict verify_semi_odd(const Graph& g, const std::vector<int>& y,
                             const PartialColoring& phi) {
    return verify_semi(g, y, phi, false);
}

std::optional<PartialColoring> brute_oracle(const Graph& g, int c, Mode mode) {
    if (c < 1) throw std::invalid_argument("brute_oracle: c < 1");
    double size = 1;
    for (int i = 0; i < g.n(); ++i) size *= c;
    if (size > 1e8) throw std::invalid_argument("brute_oracle: instance too large");

    const int n = g.n();
    PartialColoring phi(n, c);
    if (n == 0) return phi;
    std::vector<int> digits(n, 1);
    VerdictKind kind = mode == Mode::Proper  ? VerdictKind::Proper
                       : mode == Mode::Odd   ? VerdictKind::Odd
                                             : VerdictKind::Pcf;
    while (true) {
        for (int v = 0; v < n; ++v) phi.set(v, digits[v]);
        if (verify(g, phi, kind).ok) return phi;
        // Next assignment in lexicographic order (last vertex varies fastest).
        int i = n - 1;
        while (i >= 0 && digits[i] == c) digits[i--] = 1;
        if (i < 0) return std::nullopt;
        ++digits[i];
    }
}

int chi(const Graph& g, Mode mode) {
    if (g.n() == 0) return 0;
    for (int c = 1;; ++c)
        if (solve(g, c, mode)) return c;
}

std::vector<int> lemma_deletion_set(const Graph& g, int v, bool include_deg3) {
    std::vector<int> y{v};
    for (int w : g.neighbors(v)) {
        int d = g.degree(w);
        if (d <= 2 || (include_deg3 && d == 3)) y.push_back(w);
    }
    std::sort(y.begin(), y.end());
    return y;
}

}  // namespace oddlab
