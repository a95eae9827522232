#ifndef ODDLAB_PLANE_GRAPH_HPP
#define ODDLAB_PLANE_GRAPH_HPP

#include <string>
#include <vector>

#include "oddlab/graph.hpp"

namespace oddlab {

// A graph together with an explicit embedding: one closed boundary walk per
// face. Walks may repeat vertices (cut vertices, bridges); every edge must be
// traversed exactly twice across all walks. No planarity test is performed —
// faces are part of the input.
class PlaneGraph {
public:
    PlaneGraph(Graph g, std::vector<std::vector<int>> faces);

    const Graph& graph() const { return g_; }
    int face_count() const { return (int)faces_.size(); }
    const std::vector<int>& face(int f) const { return faces_[f]; }
    const std::vector<std::vector<int>>& faces() const { return faces_; }
    int face_degree(int f) const { return (int)faces_[f].size(); }

    // Face indices whose walk visits v, with multiplicity.
    std::vector<int> faces_at(int v) const;

private:
    Graph g_;
    std::vector<std::vector<int>> faces_;
};

// Text format:
//   planegraph <n> <m> <f>
//   e <u> <v>          (m lines)
//   f <k> <v1> ... <vk> (f lines, closed boundary walk)
// '#' starts a comment, tokens are whitespace-delimited.
PlaneGraph parse_plane_graph(const std::string& text);
std::string write_plane_graph(const PlaneGraph& pg);

}  // namespace oddlab

#endif
