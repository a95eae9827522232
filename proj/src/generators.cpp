#include "oddlab/generators.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "oddlab/density.hpp"

namespace oddlab {

uint64_t SplitMix64::below(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("below(0)");
    uint64_t mask = bound <= 1 ? 0 : ~0ULL >> std::countl_zero(bound - 1);
    while (true) {
        uint64_t r = next() & mask;
        if (r < bound) return r;
    }
}

Graph gen_sk(int n) {
    if (n < 2) throw std::invalid_argument("gen_sk: n < 2");
    std::vector<std::pair<int, int>> edges;
    int next = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            edges.emplace_back(i, next);
            edges.emplace_back(j, next);
            ++next;
        }
    return from_edges(next, edges);
}

Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("gen_cycle: n < 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return from_edges(n, edges);
}

Graph gen_ht(const std::vector<int>& attachments) {
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
    int n = 5;
    for (int a : attachments) {
        if (a < 0 || a >= n) throw std::invalid_argument("gen_ht: invalid attachment index");
        edges.emplace_back(a, n);
        edges.emplace_back(n, n + 1);
        edges.emplace_back(n + 1, n + 2);
        edges.emplace_back(n + 2, n + 3);
        edges.emplace_back(n + 3, a);
        n += 4;
    }
    return from_edges(n, edges);
}

Graph gen_subdivided(const Multigraph& g0) {
    std::vector<std::pair<int, int>> edges;
    int next = g0.n();
    for (auto [u, v] : g0.edges()) {
        edges.emplace_back(u, next);
        edges.emplace_back(v, next);
        ++next;
    }
    return from_edges(next, edges);
}

Multigraph gen_random_regular_multigraph(int n, int r, uint64_t seed) {
    if (n < 2 || r < 1) throw std::invalid_argument("regular multigraph: need n >= 2, r >= 1");
    if ((long long)n * r % 2 != 0)
        throw std::invalid_argument("regular multigraph: n*r must be even");
    SplitMix64 rng(seed);
    while (true) {
        // Pairing model: r stubs per vertex, shuffled and paired up.
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < r; ++i) stubs.push_back(v);
        for (size_t i = stubs.size(); i > 1; --i)
            std::swap(stubs[i - 1], stubs[rng.below(i)]);
        std::vector<std::pair<int, int>> edges;
        bool loop = false;
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            if (stubs[i] == stubs[i + 1]) { loop = true; break; }
            edges.emplace_back(stubs[i], stubs[i + 1]);
        }
        if (!loop) return Multigraph(n, edges);
    }
}

Graph gen_random_mad_bounded(int n, const Rational& bound, uint64_t seed) {
    if (n < 1 || n > 64) throw std::invalid_argument("gen_random_mad_bounded: need 1 <= n <= 64");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    for (size_t i = pairs.size(); i > 1; --i)
        std::swap(pairs[i - 1], pairs[rng.below(i)]);

    std::vector<std::pair<int, int>> kept;
    for (auto [u, v] : pairs) {
        kept.emplace_back(u, v);
        if (!mad_at_most(from_edges(n, kept), bound)) kept.pop_back();
    }
    return from_edges(n, kept);
}

Graph gen_odd4_extremal(int k) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("gen_odd4_extremal: k must be even, >= 2");
    // Branch vertices 0..k-1 in a ring. Around the ring, alternate a direct
    // edge and a 1-thread; every consecutive pair is also joined by a 3-thread.
    std::vector<std::pair<int, int>> edges;
    int next = k;
    for (int i = 0; i < k; ++i) {
        int j = (i + 1) % k;
        if (i % 2 == 0) {
            edges.emplace_back(i, j);
        } else {
            edges.emplace_back(i, next);
            edges.emplace_back(next, j);
            ++next;
        }
        edges.emplace_back(i, next);
        edges.emplace_back(next, next + 1);
        edges.emplace_back(next + 1, next + 2);
        edges.emplace_back(next + 2, j);
        next += 3;
    }
    return from_edges(next, edges);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

int to_int(const std::string& s) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::logic_error&) {
        throw std::invalid_argument("family: bad integer '" + s + "'");
    }
}

Multigraph regular_from_string(const std::string& spec, uint64_t seed) {
    // "reg5x2" -> 5-regular on 2 vertices.
    auto x = spec.find('x');
    if (spec.rfind("reg", 0) != 0 || x == std::string::npos)
        throw std::invalid_argument("family: expected regRxN, got '" + spec + "'");
    int r = to_int(spec.substr(3, x - 3));
    int n = to_int(spec.substr(x + 1));
    if (n == 2) {
        // Unique loopless r-regular multigraph on two vertices.
        std::vector<std::pair<int, int>> edges(r, {0, 1});
        return Multigraph(2, edges);
    }
    return gen_random_regular_multigraph(n, r, seed);
}

}  // namespace

Graph family_from_string(const std::string& spec, uint64_t default_seed) {
    auto parts = split(spec, ':');
    const std::string& kind = parts[0];
    if (kind == "sk" && parts.size() == 2) return gen_sk(to_int(parts[1]));
    if (kind == "cycle" && parts.size() == 2) return gen_cycle(to_int(parts[1]));
    if (kind == "ht" && parts.size() == 2) {
        auto nums = split(parts[1], ',');
        if (nums.size() == 1) {
            // Single integer = number of blocks, all glued at vertex 0.
            int t = to_int(nums[0]);
            if (t < 1) throw std::invalid_argument("family: ht needs t >= 1");
            return gen_ht(std::vector<int>(t - 1, 0));
        }
        std::vector<int> attachments;
        for (const auto& s : nums) attachments.push_back(to_int(s));
        return gen_ht(attachments);
    }
    if (kind == "subdiv" && (parts.size() == 2 || parts.size() == 3)) {
        uint64_t seed = parts.size() == 3 ? (uint64_t)to_int(parts[2]) : default_seed;
        return gen_subdivided(regular_from_string(parts[1], seed));
    }
    if (kind == "rand" && parts.size() == 4)
        return gen_random_mad_bounded(to_int(parts[1]), Rational::parse(parts[2]),
                                      (uint64_t)to_int(parts[3]));
    if (kind == "odd4x" && parts.size() == 2) return gen_odd4_extremal(to_int(parts[1]));
    throw std::invalid_argument("unknown family spec '" + spec + "'");
}

}  // namespace oddlab
