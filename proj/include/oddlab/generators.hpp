#ifndef ODDLAB_GENERATORS_HPP
#define ODDLAB_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "oddlab/graph.hpp"
#include "oddlab/rational.hpp"

namespace oddlab {

// Deterministic 64-bit PRNG (splitmix64). The stream is pinned by the
// algorithm itself, independent of platform and standard library; bounded
// draws use rejection sampling against a power-of-two mask, so generated
// corpora are reproducible byte for byte from the seed.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform draw in [0, bound).
    uint64_t below(uint64_t bound);

private:
    uint64_t state_;
};

// K_n with every edge subdivided once. Branch vertices come first (0..n-1),
// subdivision vertices follow in lexicographic pair order.
Graph gen_sk(int n);

// Cycle on n >= 3 vertices.
Graph gen_cycle(int n);

// Graph whose single nontrivial component consists of t = attachments.size()+1
// blocks, every block a 5-cycle. Block k+1 is glued at attachments[k], which
// must name an existing vertex at that point.
Graph gen_ht(const std::vector<int>& attachments);

// Subdivide every edge of a loopless multigraph once. Branch vertices keep
// their ids; the k-th edge (sorted order) gets subdivision vertex n + k.
Graph gen_subdivided(const Multigraph& g0);

// Random r-regular loopless multigraph on n vertices via the pairing model
// (parallel edges kept, pairings with loops redrawn). Requires n*r even.
Multigraph gen_random_regular_multigraph(int n, int r, uint64_t seed);

// Random graph with mad <= bound: random non-edges are added and kept only if
// the bound survives, for a fixed number of draws. n <= 64.
Graph gen_random_mad_bounded(int n, const Rational& bound, uint64_t seed);

// Extremal family for the odd-4 discharging rule: every vertex is a 2- or
// 4-vertex, and every 4-vertex sponsors two 3-threads, one 1-thread, and has
// one direct 4-neighbor (so it has exactly 7 close 2-vertices). k must be
// even, k >= 2; the graph has 4.5k vertices.
Graph gen_odd4_extremal(int k);

// CLI family grammar: "sk:6", "cycle:8", "ht:1" (t blocks, default gluing) or
// "ht:0,4,9" (explicit attachments), "subdiv:reg5x2" / "subdiv:reg5x4:seed",
// "rand:10:22/9:42", "odd4x:4". default_seed fills in when a randomized
// family omits its seed.
Graph family_from_string(const std::string& spec, uint64_t default_seed = 1);

}  // namespace oddlab

#endif
