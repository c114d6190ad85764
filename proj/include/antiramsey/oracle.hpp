#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "antiramsey/coloring.hpp"
#include "antiramsey/family.hpp"
#include "antiramsey/graph.hpp"

namespace antiramsey {

enum class ArStatus { exact, budget_exhausted };

/// Outcome of the exact search: value (lower == upper when exact), the
/// best F-free coloring found, and search statistics.
struct ArResult {
    int lower = 0;
    int upper = 0;
    std::optional<ColoringOfKn> witness;
    uint64_t nodes_explored = 0;
    ArStatus status = ArStatus::exact;

    bool exact() const { return status == ArStatus::exact; }
};

struct ArOptions {
    uint64_t node_budget = UINT64_MAX;
    bool rainbow_prune = true;  // cut branches whose colored prefix has a rainbow member
    bool bound_prune = true;    // cut branches that cannot beat the incumbent
    std::function<void(int, uint64_t)> on_improved;  // best-so-far callback
};

namespace detail {

// All copies of `pattern` inside K_n as edge-index sets, grouped by their
// largest edge index so a copy is tested exactly once, when its last edge
// gets colored.
struct CopyTable {
    std::vector<std::vector<std::vector<int>>> by_last_edge;

    CopyTable(int n, const GraphFamily& f) {
        int edges = static_cast<int>(binom2(n));
        by_last_edge.resize(edges);
        Graph host = complete(n);
        std::set<std::vector<int>> seen;
        for (const auto& member : f.members()) {
            if (member.n() > n) continue;  // cannot embed: never constrains
            for_each_embedding(member, host, [&](const std::vector<int>& map) {
                std::vector<int> idx;
                idx.reserve(member.edges().size());
                for (auto [u, v] : member.edges())
                    idx.push_back(edge_index_of(n, map[u], map[v]));
                std::sort(idx.begin(), idx.end());
                if (seen.insert(idx).second) by_last_edge[idx.back()].push_back(idx);
                return true;
            });
        }
    }
};

struct ArSearch {
    int n;
    int edges;
    const ArOptions& opt;
    CopyTable copies;
    std::vector<int> color;      // per edge index; -1 = uncolored
    std::vector<int> best_color;
    int best = -1;
    uint64_t nodes = 0;
    bool exhausted = false;

    ArSearch(int n_, const GraphFamily& f, const ArOptions& o)
        : n(n_), edges(static_cast<int>(binom2(n_))), opt(o), copies(n_, f),
          color(edges, -1) {}

    // number of copies completed by edge i whose edges are pairwise distinct
    int rainbow_completions(int i) const {
        int hits = 0;
        for (const auto& idx : copies.by_last_edge[i]) {
            bool rainbow = true;
            for (size_t a = 0; a < idx.size() && rainbow; ++a)
                for (size_t b = a + 1; b < idx.size(); ++b)
                    if (color[idx[a]] == color[idx[b]]) {
                        rainbow = false;
                        break;
                    }
            hits += rainbow;
        }
        return hits;
    }

    void run() {
        dfs(0, 0, 0);
        if (best < 0) best = 0;  // no F-free coloring exists at all
    }

    // i: next edge; used: colors used so far; violations: rainbow copies in prefix
    void dfs(int i, int used, int violations) {
        if (exhausted) return;
        if (i == edges) {
            if (violations == 0 && used > best) {
                best = used;
                best_color = color;
                if (opt.on_improved) opt.on_improved(best, nodes);
            }
            return;
        }
        if (opt.bound_prune && used + (edges - i) <= best) return;
        for (int c = 0; c <= used && !exhausted; ++c) {  // c == used opens a new color
            if (++nodes > opt.node_budget) {
                exhausted = true;
                return;
            }
            color[i] = c;
            int fresh = rainbow_completions(i);
            if (!(opt.rainbow_prune && fresh > 0))
                dfs(i + 1, std::max(used, c + 1), violations + fresh);
            color[i] = -1;
        }
    }
};

}  // namespace detail

/// Exact AR(n, f) by depth-first restricted-growth coloring of the edges of
/// K_n in lexicographic order (edge i may reuse any color seen so far or open
/// one new color, which also fixes the first edge to color 0 and removes all
/// color-permutation symmetry). Value 0 means no F-free coloring exists.
inline ArResult ar_exact(int n, const GraphFamily& f, const ArOptions& opt = {}) {
    if (f.empty()) throw std::invalid_argument("ar_exact: empty family");
    for (const auto& g : f.members())
        if (g.n() > n)
            throw std::invalid_argument("ar_exact: member larger than n");
    if (binom2(n) > 28) throw resource_error("ar_exact: documented limit C(n,2) <= 28");
    detail::ArSearch search(n, f, opt);
    search.run();
    ArResult r;
    r.nodes_explored = search.nodes;
    r.lower = search.best;
    r.status = search.exhausted ? ArStatus::budget_exhausted : ArStatus::exact;
    r.upper = search.exhausted ? static_cast<int>(binom2(n)) : search.best;
    if (!search.best_color.empty()) {
        r.witness = ColoringOfKn(n, search.best_color);
        if (!is_family_free(*r.witness, f))
            throw std::logic_error("ar_exact: witness failed re-verification");
    }
    return r;
}

/// Certified lower bound from an F-free construction.
inline int ar_lower_from_construction(const ColoringOfKn& c, const GraphFamily& f) {
    if (!is_family_free(c, f))
        throw std::invalid_argument("ar_lower_from_construction: coloring is not F-free");
    return num_colors(c);
}

enum class ArRelation { equal, oracle_below, oracle_above };

struct ArCrossCheck {
    ArResult oracle;
    long long formula_value = 0;
    ArRelation relation = ArRelation::equal;
};

/// Compare the exact oracle against an asymptotic formula value. The
/// theorems hold for sufficiently large n only, so a discrepancy is reported,
/// never treated as an error.
inline ArCrossCheck ar_cross_check(int n, const GraphFamily& f, long long formula_value,
                                   const ArOptions& opt = {}) {
    ArCrossCheck out;
    out.oracle = ar_exact(n, f, opt);
    out.formula_value = formula_value;
    if (out.oracle.lower == formula_value && out.oracle.exact())
        out.relation = ArRelation::equal;
    else if (out.oracle.lower < formula_value)
        out.relation = ArRelation::oracle_below;
    else
        out.relation = ArRelation::oracle_above;
    return out;
}

}  // namespace antiramsey
