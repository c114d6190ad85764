#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "antiramsey/graph.hpp"

namespace antiramsey {

inline bool contains_triangle(const Graph& g) {
    AdjBits adj(g);
    for (auto [u, v] : g.edges())
        for (int w = 0; w < g.n(); ++w)
            if (adj.test(u, w) && adj.test(v, w)) return true;
    return false;
}

namespace detail {

inline Graph circulant(int m, const std::vector<int>& dists) {
    std::vector<Edge> es;
    for (int v = 0; v < m; ++v)
        for (int s : dists) {
            int u = (v + s) % m;
            es.emplace_back(std::min(u, v), std::max(u, v));
        }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Graph(m, std::move(es));
}

// Even m: a circulant on odd distances is bipartite (parity classes), hence
// triangle free. Distance s < m/2 adds 2 to every degree, s = m/2 adds 1.
inline bool odd_distance_set(int m, int d, std::vector<int>& out) {
    out.clear();
    int need = d;
    if (need % 2 == 1) {
        if ((m / 2) % 2 == 0) return false;  // m/2 must itself be odd
        out.push_back(m / 2);
        need -= 1;
    }
    for (int s = 1; s < m / 2 && need > 0; s += 2) {
        out.push_back(s);
        need -= 2;
    }
    std::sort(out.begin(), out.end());
    return need == 0;
}

// Odd m, even d: lexicographically-first distance set whose circulant is
// triangle free, if any.
inline bool odd_m_distance_set(int m, int d, int from, std::vector<int>& pick) {
    if (static_cast<int>(pick.size()) == d / 2)
        return !contains_triangle(circulant(m, pick));
    for (int s = from; s <= (m - 1) / 2; ++s) {
        pick.push_back(s);
        if (odd_m_distance_set(m, d, s + 1, pick)) return true;
        pick.pop_back();
    }
    return false;
}

// Lexicographic backtracking: first edge set realizing the target degree
// sequence, optionally triangle free. Edges are considered in lex order and
// taking an edge is preferred over skipping it.
struct DegreeConstrainedSearch {
    int m;
    std::vector<int> target;
    bool triangle_free;
    std::vector<Edge> cand;
    std::vector<int> deg;
    std::vector<uint64_t> adj;
    std::vector<Edge> chosen;
    int deficit;
    uint64_t nodes = 0;
    static constexpr uint64_t kBudget = 50'000'000;

    DegreeConstrainedSearch(int m_, std::vector<int> target_, bool tf)
        : m(m_), target(std::move(target_)), triangle_free(tf), deg(m_, 0), adj(m_, 0) {
        for (int u = 0; u < m; ++u)
            for (int v = u + 1; v < m; ++v) cand.emplace_back(u, v);
        deficit = 0;
        for (int t : target) deficit += t;
    }

    bool run() { return dfs(0); }

private:
    bool dfs(size_t i) {
        if (++nodes > kBudget) throw resource_error("regular_graph: search budget exceeded");
        if (deficit == 0) return true;
        if (i == cand.size()) return false;
        if (!feasible(i)) return false;
        auto [u, v] = cand[i];
        if (deg[u] < target[u] && deg[v] < target[v] &&
            !(triangle_free && (adj[u] & adj[v]) != 0)) {
            take(u, v);
            chosen.push_back(cand[i]);
            if (dfs(i + 1)) return true;
            chosen.pop_back();
            untake(u, v);
        }
        return dfs(i + 1);
    }

    void take(int u, int v) {
        deg[u]++, deg[v]++;
        deficit -= 2;
        adj[u] |= uint64_t(1) << v;
        adj[v] |= uint64_t(1) << u;
    }
    void untake(int u, int v) {
        deg[u]--, deg[v]--;
        deficit += 2;
        adj[u] &= ~(uint64_t(1) << v);
        adj[v] &= ~(uint64_t(1) << u);
    }

    bool feasible(size_t i) const {
        std::vector<int> room(m, 0);
        for (size_t j = i; j < cand.size(); ++j) {
            room[cand[j].first]++;
            room[cand[j].second]++;
        }
        for (int v = 0; v < m; ++v)
            if (deg[v] + room[v] < target[v]) return false;
        return true;
    }
};

}  // namespace detail

/// A d-regular graph on m vertices when m*d is even, otherwise nearly
/// d-regular (all degrees d except one vertex of degree d-1). Triangle free
/// unless allow_triangles. Deterministic for fixed (m,d): circulant
/// constructions are preferred, lexicographic backtracking is the fallback.
inline Graph regular_graph(int m, int d, bool allow_triangles) {
    if (m < 1 || d < 0) throw std::invalid_argument("regular_graph: need m >= 1, d >= 0");
    if (d >= m) throw std::invalid_argument("regular_graph: infeasible, degree >= vertex count");
    if (d == 0) return Graph(m, {});
    if (d == 1) return matching(m);
    if (!allow_triangles && m < 2 * d)
        throw std::invalid_argument(
            "regular_triangle_free: infeasible, a triangle-free d-regular(-ish) graph needs m >= 2d");
    if (d == 2) {
        if (!allow_triangles && m < 4)
            throw std::invalid_argument("regular_triangle_free: no triangle-free 2-regular graph on " +
                                        std::to_string(m) + " vertices");
        return cycle(m);
    }
    if (m > 62) throw resource_error("regular_graph: vertex limit 62 exceeded");

    std::vector<int> dists;
    if (m % 2 == 0 && detail::odd_distance_set(m, d, dists)) return detail::circulant(m, dists);
    if (m % 2 == 1 && d % 2 == 0 && !allow_triangles) {
        std::vector<int> pick;
        if (detail::odd_m_distance_set(m, d, 1, pick)) return detail::circulant(m, pick);
    }

    std::vector<int> target(m, d);
    if ((m * d) % 2 == 1) target[m - 1] = d - 1;  // parity forces one short vertex
    detail::DegreeConstrainedSearch search(m, target, !allow_triangles);
    if (!search.run())
        throw std::invalid_argument("regular_graph: infeasible (m=" + std::to_string(m) +
                                    ", d=" + std::to_string(d) + ")");
    return Graph(m, search.chosen);
}

/// Gadget of the class U'_{m,d+1}: d-regular (or nearly d-regular when m*d is
/// odd) triangle-free graph on m vertices.
inline Graph regular_triangle_free(int m, int d) { return regular_graph(m, d, false); }

}  // namespace antiramsey
