#ifndef ODDLAB_THREADS_HPP
#define ODDLAB_THREADS_HPP

#include <optional>
#include <vector>

#include "oddlab/graph.hpp"

namespace oddlab {

// A maximal path of degree-2 vertices. Anchors are the adjacent non-2-vertices
// at each end (absent for a pure cycle of 2-vertices, which is stored as one
// cyclic thread). Anchor degree is usually >= 3; a degree-1 anchor can occur
// in degenerate inputs and is kept, anchor-based queries filter on demand.
struct Thread {
    std::vector<int> vertices;  // the degree-2 vertices, in path order
    std::optional<int> front_anchor;
    std::optional<int> back_anchor;
    bool cyclic = false;

    int length() const { return (int)vertices.size(); }
};

class ThreadDecomposition {
public:
    explicit ThreadDecomposition(std::vector<Thread> threads, int n);

    const std::vector<Thread>& threads() const { return threads_; }
    // Thread containing the degree-2 vertex v, or -1.
    int thread_of(int v) const { return v < (int)owner_.size() ? owner_[v] : -1; }

    // Thread-ends anchored at v: (thread index, true when v is the front
    // anchor). A thread anchored at v on both ends contributes two entries.
    std::vector<std::pair<int, bool>> ends_at(int v) const;

    // True iff some thread anchored at v has at least ell vertices, i.e. "v is
    // adjacent to an ell-thread". Cyclic threads have no anchors and never count.
    bool adjacent_to_thread(int v, int ell) const;

private:
    std::vector<Thread> threads_;
    std::vector<int> owner_;
};

ThreadDecomposition threads(const Graph& g);

// Longest run of consecutive degree-2 vertices anywhere in the graph; a cyclic
// thread of k vertices counts as k. Zero when the graph has no 2-vertex.
int max_thread_length(const ThreadDecomposition& td);

}  // namespace oddlab

#endif
