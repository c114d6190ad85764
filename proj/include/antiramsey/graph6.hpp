#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "antiramsey/graph.hpp"

namespace antiramsey {

/// graph6 codec, header-free variant, n <= 62 (single size byte).
/// Bit order: columns of the upper triangle, i.e. (0,1),(0,2),(1,2),(0,3),...

inline std::string to_graph6(const Graph& g) {
    if (g.n() > 62) throw resource_error("to_graph6: only n <= 62 supported");
    std::string out;
    out.push_back(static_cast<char>(g.n() + 63));
    std::vector<char> bits;
    bits.reserve(size_t(binom2(g.n())));
    for (int v = 1; v < g.n(); ++v)
        for (int u = 0; u < v; ++u) bits.push_back(g.has_edge(u, v) ? 1 : 0);
    for (size_t i = 0; i < bits.size(); i += 6) {
        int x = 0;
        for (size_t j = 0; j < 6; ++j) {
            x <<= 1;
            if (i + j < bits.size() && bits[i + j]) x |= 1;
        }
        out.push_back(static_cast<char>(x + 63));
    }
    return out;
}

inline Graph from_graph6(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("from_graph6: empty string");
    int n = static_cast<unsigned char>(s[0]) - 63;
    if (n < 0 || n > 62) throw std::invalid_argument("from_graph6: unsupported size byte");
    long long nbits = binom2(n);
    long long expect = 1 + (nbits + 5) / 6;
    if (static_cast<long long>(s.size()) != expect)
        throw std::invalid_argument("from_graph6: wrong length for n=" + std::to_string(n));
    std::vector<Edge> es;
    long long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            int c = static_cast<unsigned char>(s[1 + bit / 6]) - 63;
            if (c < 0 || c > 63) throw std::invalid_argument("from_graph6: byte out of range");
            if (c >> (5 - bit % 6) & 1) es.emplace_back(u, v);
        }
    // trailing pad bits must be zero
    for (long long b = nbits; b < (nbits + 5) / 6 * 6; ++b) {
        int c = static_cast<unsigned char>(s[1 + b / 6]) - 63;
        if (c >> (5 - b % 6) & 1) throw std::invalid_argument("from_graph6: nonzero padding");
    }
    return Graph(n, std::move(es));
}

/// Family files: one graph6 line per member. Blank lines are ignored.
inline std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

inline void write_graph6_lines(std::ostream& out, const std::vector<Graph>& gs) {
    for (const auto& g : gs) out << to_graph6(g) << '\n';
}

}  // namespace antiramsey
