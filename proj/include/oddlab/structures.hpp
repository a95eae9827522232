#ifndef ODDLAB_STRUCTURES_HPP
#define ODDLAB_STRUCTURES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oddlab/blocks.hpp"
#include "oddlab/plane_graph.hpp"
#include "oddlab/threads.hpp"

namespace oddlab {

// Per-vertex degree statistics. n1/n2/n3 count neighbors of that exact degree,
// n4p the rest; ne counts easy neighbors. A 3+-vertex is easy when it has odd
// degree or a neighbor of degree at most 2.
struct DegStats {
    int d = 0;
    int n1 = 0, n2 = 0, n3 = 0, n4p = 0;
    int ne = 0;
};

bool is_easy(const Graph& g, int v);
DegStats deg_stats(const Graph& g, int v);
int n_at_most(const Graph& g, int v, int d);
int n_at_least(const Graph& g, int v, int d);

// Induced SK_{c+1} whose degree-2 vertices are degree-2 in the host graph.
struct BadStructureWitness {
    std::vector<int> branch;                          // c+1 vertices, sorted
    std::map<std::pair<int, int>, int> subdivision;   // branch pair -> 2-vertex
};

std::optional<BadStructureWitness> find_bad_structure(const Graph& g, int c);
bool validate_bad_structure(const Graph& g, int c, const BadStructureWitness& w);

// Component whose blocks are all 5-cycles (class H member witness).
struct ClassHWitness {
    std::vector<int> component;            // sorted vertex set
    std::vector<std::vector<int>> blocks;  // its blocks, each a 5-cycle
};

std::optional<ClassHWitness> in_class_H(const Graph& g);
bool validate_class_H(const Graph& g, const ClassHWitness& w);

// Lemma residues, returned so callers compare against c:
//   Pcf:  2d - 2*n1 - n2
//   Pcf3: 2d - 2*n1 - n2 - n3
//   Odd:  2d - 2*n1 - n2 - ne
enum class LemmaKind { Pcf, Pcf3, Odd };
int lemma_bound(const Graph& g, int v, LemmaKind kind);

// 2-vertices on threads anchored at v. Requires d(v) >= 3.
std::vector<int> close_two_vertices(const Graph& g, int v);
std::vector<int> close_two_vertices(const Graph& g, const ThreadDecomposition& td, int v);

// Reducible-configuration detection.
enum class Context { PcfC, OddMadC, Odd4, PlanarOdd6 };

struct ConfigurationFinding {
    std::string rule;           // e.g. "pcf:no-1-vertex"
    std::vector<int> vertices;  // witness vertices
    std::vector<int> faces;     // witness faces (planar context only)
};

std::vector<ConfigurationFinding> detect_reducible(const Graph& g, Context ctx, int c = 0);
std::vector<ConfigurationFinding> detect_reducible(const PlaneGraph& pg, Context ctx, int c = 0);

// Re-checks one finding against its structural predicate.
bool revalidate_finding(const Graph& g, const ConfigurationFinding& f, Context ctx, int c = 0);
bool revalidate_finding(const PlaneGraph& pg, const ConfigurationFinding& f, Context ctx,
                        int c = 0);

// ceil(4c / (c-2)); the planar girth threshold for PCF c-colorability, c >= 5.
int girth_threshold(int c);

}  // namespace oddlab

#endif
