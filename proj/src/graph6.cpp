#include "oddlab/graph6.hpp"

#include <stdexcept>
#include <vector>

namespace oddlab {

namespace {

constexpr int kMaxLongN = 258047;  // 2^18 - 1, largest n the 3-byte header holds

int checked_byte(const std::string& s, size_t i) {
    if (i >= s.size()) throw std::invalid_argument("graph6: truncated line");
    unsigned char c = (unsigned char)s[i];
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
    return c - 63;
}

}  // namespace

Graph parse_graph6(const std::string& raw) {
    std::string line = raw;
    const std::string header = ">>graph6<<";
    if (line.rfind(header, 0) == 0) line = line.substr(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.empty()) throw std::invalid_argument("graph6: empty line");

    size_t pos = 0;
    long long n;
    if ((unsigned char)line[0] != 126) {
        n = checked_byte(line, pos++);
    } else {
        if (line.size() > 1 && (unsigned char)line[1] == 126)
            throw std::invalid_argument("graph6: 8-byte vertex counts unsupported");
        ++pos;
        n = 0;
        for (int k = 0; k < 3; ++k) n = (n << 6) | checked_byte(line, pos++);
        if (n > kMaxLongN) throw std::invalid_argument("graph6: malformed header");
    }

    long long nbits = n * (n - 1) / 2;
    size_t nbytes = (size_t)((nbits + 5) / 6);
    if (line.size() != pos + nbytes)
        throw std::invalid_argument("graph6: bit field length mismatch");

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    int cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (bit % 6 == 0) cur = checked_byte(line, pos + (size_t)(bit / 6));
            if (cur & (1 << (5 - bit % 6))) edges.emplace_back(i, j);
        }
    }
    // Padding bits must be zero.
    for (; bit < (long long)nbytes * 6; ++bit) {
        if (bit % 6 == 0) cur = checked_byte(line, pos + (size_t)(bit / 6));
        if (cur & (1 << (5 - bit % 6)))
            throw std::invalid_argument("graph6: nonzero padding");
    }
    return from_edges((int)n, edges);
}

std::string write_graph6(const Graph& g) {
    int n = g.n();
    if (n > kMaxLongN) throw std::invalid_argument("graph6: graph too large");
    std::string out;
    if (n <= 62) {
        out.push_back((char)(n + 63));
    } else {
        out.push_back((char)126);
        out.push_back((char)(((n >> 12) & 63) + 63));
        out.push_back((char)(((n >> 6) & 63) + 63));
        out.push_back((char)((n & 63) + 63));
    }
    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back((char)(acc + 63));
                acc = nb = 0;
            }
        }
    }
    if (nb > 0) out.push_back((char)((acc << (6 - nb)) + 63));
    return out;
}

}  // namespace oddlab
