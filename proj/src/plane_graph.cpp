#include "oddlab/plane_graph.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace oddlab {

PlaneGraph::PlaneGraph(Graph g, std::vector<std::vector<int>> faces)
    : g_(std::move(g)), faces_(std::move(faces)) {
    std::map<std::pair<int, int>, int> uses;
    for (const auto& walk : faces_) {
        if (walk.empty()) throw std::invalid_argument("plane graph: empty face walk");
        for (size_t i = 0; i < walk.size(); ++i) {
            int u = walk[i], v = walk[(i + 1) % walk.size()];
            if (u < 0 || u >= g_.n() || v < 0 || v >= g_.n())
                throw std::invalid_argument("plane graph: walk vertex out of range");
            if (!g_.has_edge(u, v))
                throw std::invalid_argument("plane graph: walk step is not an edge");
            ++uses[{std::min(u, v), std::max(u, v)}];
        }
    }
    for (auto [u, v] : g_.edges()) {
        auto it = uses.find({u, v});
        if (it == uses.end() || it->second != 2)
            throw std::invalid_argument("plane graph: edge not covered exactly twice");
        uses.erase(it);
    }
    if (!uses.empty()) throw std::invalid_argument("plane graph: walk uses unknown edge");
    if (is_connected(g_) && g_.n() >= 1) {
        long long euler = (long long)g_.n() - g_.m() + (long long)faces_.size();
        if (euler != 2) throw std::invalid_argument("plane graph: Euler relation violated");
    }
}

std::vector<int> PlaneGraph::faces_at(int v) const {
    std::vector<int> out;
    for (int f = 0; f < (int)faces_.size(); ++f)
        for (int w : faces_[f])
            if (w == v) out.push_back(f);
    return out;
}

PlaneGraph parse_plane_graph(const std::string& text) {
    // Strip comments, then tokenize.
    std::string clean;
    clean.reserve(text.size());
    bool comment = false;
    for (char c : text) {
        if (c == '#') comment = true;
        if (c == '\n') comment = false;
        clean.push_back(comment ? ' ' : c);
    }
    std::istringstream in(clean);
    std::string tag;
    if (!(in >> tag) || tag != "planegraph")
        throw std::invalid_argument("plane graph: missing 'planegraph' header");
    int n, m, f;
    if (!(in >> n >> m >> f) || n < 0 || m < 0 || f < 0)
        throw std::invalid_argument("plane graph: bad header counts");
    std::vector<std::pair<int, int>> edges(m);
    for (auto& [u, v] : edges) {
        if (!(in >> tag >> u >> v) || tag != "e")
            throw std::invalid_argument("plane graph: bad edge line");
    }
    std::vector<std::vector<int>> faces(f);
    for (auto& walk : faces) {
        int k;
        if (!(in >> tag >> k) || tag != "f" || k <= 0)
            throw std::invalid_argument("plane graph: bad face line");
        walk.resize(k);
        for (int& v : walk)
            if (!(in >> v)) throw std::invalid_argument("plane graph: truncated face walk");
    }
    return PlaneGraph(from_edges(n, edges), faces);
}

std::string write_plane_graph(const PlaneGraph& pg) {
    std::ostringstream out;
    const Graph& g = pg.graph();
    out << "planegraph " << g.n() << " " << g.m() << " " << pg.face_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    for (const auto& walk : pg.faces()) {
        out << "f " << walk.size();
        for (int v : walk) out << " " << v;
        out << "\n";
    }
    return out.str();
}

}  // namespace oddlab
