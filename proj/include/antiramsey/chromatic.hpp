#pragma once

#include <cstdint>
#include <vector>

#include "antiramsey/graph.hpp"

namespace antiramsey {

namespace detail {

struct ColorSolver {
    int n;
    std::vector<uint64_t> adj;  // one word per vertex (n <= 64)
    uint64_t budget;
    uint64_t nodes = 0;

    ColorSolver(const Graph& g, uint64_t budget_) : n(g.n()), adj(g.n(), 0), budget(budget_) {
        for (auto [u, v] : g.edges()) {
            adj[u] |= uint64_t(1) << v;
            adj[v] |= uint64_t(1) << u;
        }
    }

    // Greedy clique on vertices ordered by descending degree. A lower bound only.
    int greedy_clique() const {
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::vector<int> deg(n);
        for (int v = 0; v < n; ++v) deg[v] = __builtin_popcountll(adj[v]);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });
        int best = 0;
        for (int start = 0; start < n && start < 8; ++start) {
            uint64_t cand = ~uint64_t(0);
            if (n < 64) cand = (uint64_t(1) << n) - 1;
            int size = 0;
            for (int i = start; i < n; ++i) {
                int v = order[i];
                if (cand >> v & 1) {
                    ++size;
                    cand &= adj[v];
                }
            }
            best = std::max(best, size);
        }
        return best;
    }

    int greedy_colors() const {
        std::vector<int> color(n, -1);
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::vector<int> deg(n);
        for (int v = 0; v < n; ++v) deg[v] = __builtin_popcountll(adj[v]);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });
        int used = 0;
        for (int v : order) {
            uint64_t taken = 0;
            for (int u = 0; u < n; ++u)
                if (color[u] >= 0 && (adj[v] >> u & 1)) taken |= uint64_t(1) << color[u];
            int c = 0;
            while (taken >> c & 1) ++c;
            color[v] = c;
            used = std::max(used, c + 1);
        }
        return n == 0 ? 0 : used;
    }

    // DSATUR-style backtracking: is the graph properly k-colorable?
    bool colorable(int k) {
        if (k >= n) return true;
        color_.assign(n, -1);
        return extend(k, 0);
    }

private:
    std::vector<int> color_;

    bool extend(int k, int colored) {
        if (colored == n) return true;
        if (++nodes > budget) throw resource_error("chromatic_number: search budget exceeded");
        // pick uncolored vertex with max saturation, tie-break max degree then index
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color_[v] >= 0) continue;
            uint64_t sat = 0;
            for (int u = 0; u < n; ++u)
                if (color_[u] >= 0 && (adj[v] >> u & 1)) sat |= uint64_t(1) << color_[u];
            int s = __builtin_popcountll(sat);
            int d = __builtin_popcountll(adj[v]);
            if (s > pick_sat || (s == pick_sat && d > pick_deg)) {
                pick = v;
                pick_sat = s;
                pick_deg = d;
            }
        }
        uint64_t taken = 0;
        int maxc = -1;
        for (int u = 0; u < n; ++u)
            if (color_[u] >= 0) {
                maxc = std::max(maxc, color_[u]);
                if (adj[pick] >> u & 1) taken |= uint64_t(1) << color_[u];
            }
        int limit = std::min(k - 1, maxc + 1);  // first use of a new color is canonical
        for (int c = 0; c <= limit; ++c) {
            if (taken >> c & 1) continue;
            color_[pick] = c;
            if (extend(k, colored + 1)) return true;
            color_[pick] = -1;
        }
        return false;
    }
};

}  // namespace detail

constexpr int kChromaticMaxVertices = 64;

inline bool is_k_colorable(const Graph& g, int k, uint64_t budget = 50'000'000) {
    if (k < 0) return g.n() == 0;
    if (g.n() == 0) return true;
    if (k == 0) return false;
    if (g.n() > kChromaticMaxVertices)
        throw resource_error("is_k_colorable: graph exceeds vertex limit 64");
    detail::ColorSolver s(g, budget);
    return s.colorable(k);
}

/// Exact chromatic number. chi(0-vertex graph) = 0; chi of an edgeless graph
/// on >= 1 vertices = 1. Vertex limit 64; blown search budgets raise
/// resource_error rather than returning an estimate.
inline int chromatic_number(const Graph& g, uint64_t budget = 50'000'000) {
    if (g.n() == 0) return 0;
    if (g.edge_count() == 0) return 1;
    if (g.n() > kChromaticMaxVertices)
        throw resource_error("chromatic_number: graph exceeds vertex limit 64");
    detail::ColorSolver s(g, budget);
    int lo = std::max(2, s.greedy_clique());
    int hi = s.greedy_colors();
    for (int k = lo; k < hi; ++k)
        if (s.colorable(k)) return k;
    return hi;
}

}  // namespace antiramsey
