#ifndef ODDLAB_GRAPH6_HPP
#define ODDLAB_GRAPH6_HPP

#include <string>

#include "oddlab/graph.hpp"

namespace oddlab {

// Standard graph6 interchange format, one graph per line. Both the one-byte
// header (n <= 62) and the '~'-prefixed three-byte header are handled.
Graph parse_graph6(const std::string& line);
std::string write_graph6(const Graph& g);

}  // namespace oddlab

#endif
