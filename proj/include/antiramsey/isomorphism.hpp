#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "antiramsey/graph.hpp"

namespace antiramsey {

/// Isomorphism-invariant certificate: two graphs have equal CanonicalForm
/// iff they are isomorphic. bytes = [n] + upper-triangle bits of the
/// canonically relabeled graph, row-major, MSB-first.
struct CanonicalForm {
    std::vector<uint8_t> bytes;
    bool operator==(const CanonicalForm& o) const { return bytes == o.bytes; }
    bool operator!=(const CanonicalForm& o) const { return bytes != o.bytes; }
    bool operator<(const CanonicalForm& o) const { return bytes < o.bytes; }
};

constexpr int kCanonicalMaxVertices = 32;

namespace detail {

// Individualization-refinement search for a canonical labeling of one graph.
// Suited to n <= 32 (adjacency rows in single words). The worst cases
// (vertex-transitive graphs with huge automorphism groups) are mostly caught
// earlier by the component / complement reductions in canonical_labeling.
struct CanonSearch {
    int n;
    std::vector<uint64_t> adj;
    uint64_t leaf_budget;
    uint64_t leaves = 0;
    std::vector<uint64_t> best_bits;
    std::vector<int> best_perm;  // position -> original vertex

    CanonSearch(const Graph& g, uint64_t budget) : n(g.n()), adj(g.n(), 0), leaf_budget(budget) {
        for (auto [u, v] : g.edges()) {
            adj[u] |= uint64_t(1) << v;
            adj[v] |= uint64_t(1) << u;
        }
    }

    using Partition = std::vector<std::vector<int>>;

    void refine(Partition& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<uint64_t> masks(cells.size(), 0);
            for (size_t c = 0; c < cells.size(); ++c)
                for (int v : cells[c]) masks[c] |= uint64_t(1) << v;
            Partition next;
            for (auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::vector<int>, int>> sigs;
                sigs.reserve(cell.size());
                for (int v : cell) {
                    std::vector<int> sig(cells.size());
                    for (size_t c = 0; c < cells.size(); ++c)
                        sig[c] = __builtin_popcountll(adj[v] & masks[c]);
                    sigs.emplace_back(std::move(sig), v);
                }
                std::sort(sigs.begin(), sigs.end());
                std::vector<int> cur;
                for (size_t i = 0; i < sigs.size(); ++i) {
                    if (i > 0 && sigs[i].first != sigs[i - 1].first) {
                        next.push_back(cur);
                        cur.clear();
                        changed = true;
                    }
                    cur.push_back(sigs[i].second);
                }
                next.push_back(cur);
            }
            cells = std::move(next);
        }
        for (auto& cell : cells) std::sort(cell.begin(), cell.end());
    }

    void run() {
        Partition cells{std::vector<int>(n)};
        for (int v = 0; v < n; ++v) cells[0][v] = v;
        refine(cells);
        dfs(cells);
    }

    void dfs(const Partition& cells) {
        int target = -1;
        for (size_t c = 0; c < cells.size(); ++c)
            if (cells[c].size() > 1) {
                target = static_cast<int>(c);
                break;
            }
        if (target < 0) {
            if (++leaves > leaf_budget)
                throw resource_error("canonical_form: labeling search budget exceeded");
            std::vector<int> perm(n);
            for (size_t c = 0; c < cells.size(); ++c) perm[c] = cells[c][0];
            consider(perm);
            return;
        }
        for (int v : cells[target]) {
            Partition split;
            split.reserve(cells.size() + 1);
            for (size_t c = 0; c < cells.size(); ++c) {
                if (static_cast<int>(c) == target) {
                    split.push_back({v});
                    std::vector<int> rest;
                    for (int u : cells[c])
                        if (u != v) rest.push_back(u);
                    split.push_back(std::move(rest));
                } else {
                    split.push_back(cells[c]);
                }
            }
            refine(split);
            dfs(split);
        }
    }

    void consider(const std::vector<int>& perm) {
        std::vector<uint64_t> bits((size_t(n) * (n - 1) / 2 + 63) / 64, 0);
        long long b = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++b)
                if (adj[perm[i]] >> perm[j] & 1) bits[b / 64] |= uint64_t(1) << (63 - b % 64);
        if (best_perm.empty() || bits < best_bits) {
            best_bits = std::move(bits);
            best_perm = perm;
        }
    }
};

inline std::vector<std::vector<int>> components_of(const Graph& g) {
    std::vector<int> comp(g.n(), -1);
    std::vector<std::vector<int>> nbr(g.n());
    for (auto [u, v] : g.edges()) {
        nbr[u].push_back(v);
        nbr[v].push_back(u);
    }
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, verts;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            verts.push_back(v);
            for (int u : nbr[v])
                if (comp[u] < 0) {
                    comp[u] = comp[s];
                    stack.push_back(u);
                }
        }
        std::sort(verts.begin(), verts.end());
        out.push_back(std::move(verts));
    }
    return out;
}

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g);

/// A labeling lab (original vertex -> canonical position) such that the
/// relabeled graph is identical for all isomorphic inputs.
inline std::vector<int> canonical_labeling(const Graph& g) {
    if (g.n() > kCanonicalMaxVertices)
        throw resource_error("canonical_labeling: graph exceeds vertex limit 32");
    if (g.n() == 0) return {};
    auto comps = detail::components_of(g);
    if (comps.size() > 1) {
        struct Piece {
            CanonicalForm form;
            std::vector<int> verts;   // original labels
            std::vector<int> locallab;  // local vertex -> local position
        };
        std::vector<Piece> pieces;
        for (auto& verts : comps) {
            Graph sub = g.induced(verts);
            pieces.push_back({canonical_form(sub), verts, canonical_labeling(sub)});
        }
        std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
            if (a.verts.size() != b.verts.size()) return a.verts.size() < b.verts.size();
            return a.form.bytes < b.form.bytes;
        });
        std::vector<int> lab(g.n());
        int base = 0;
        for (auto& piece : pieces) {
            for (size_t i = 0; i < piece.verts.size(); ++i)
                lab[piece.verts[i]] = base + piece.locallab[i];
            base += static_cast<int>(piece.verts.size());
        }
        return lab;
    }
    // connected: if the complement is disconnected (g is a join), a canonical
    // labeling of the complement is also one for g
    if (g.n() >= 2) {
        Graph co = complement(g);
        if (detail::components_of(co).size() > 1) return canonical_labeling(co);
    }
    detail::CanonSearch search(g, 1'000'000);
    search.run();
    std::vector<int> lab(g.n());
    for (int pos = 0; pos < g.n(); ++pos) lab[search.best_perm[pos]] = pos;
    return lab;
}

inline CanonicalForm canonical_form(const Graph& g) {
    auto lab = canonical_labeling(g);
    CanonicalForm f;
    f.bytes.push_back(static_cast<uint8_t>(g.n()));
    f.bytes.resize(1 + (size_t(binom2(g.n())) + 7) / 8, 0);
    for (auto [u, v] : g.edges()) {
        int i = lab[u], j = lab[v];
        if (i > j) std::swap(i, j);
        long long b = static_cast<long long>(i) * (2 * g.n() - i - 1) / 2 + (j - i - 1);
        f.bytes[1 + b / 8] |= uint8_t(1) << (7 - b % 8);
    }
    return f;
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

// -- subgraph containment ------------------------------------------------------

namespace detail {

// Backtracking subgraph search over the pattern's support, vertices ordered to
// keep early branches constrained. Callback gets the full pattern->host map
// (isolated pattern vertices mapped afterwards); return false to stop.
struct SubgraphSearch {
    const Graph& pattern;
    const Graph& host;
    AdjBits hadj;
    std::vector<int> order;       // support vertices, search order
    std::vector<std::vector<int>> placed_nbrs;  // per order index, indices into `order`
    std::vector<int> pdeg, hdeg;

    SubgraphSearch(const Graph& p, const Graph& h) : pattern(p), host(h), hadj(h) {
        pdeg = p.degrees();
        hdeg = h.degrees();
        auto sup = p.support();
        std::vector<char> chosen(p.n(), 0);
        std::vector<std::vector<int>> nbr(p.n());
        for (auto [u, v] : p.edges()) {
            nbr[u].push_back(v);
            nbr[v].push_back(u);
        }
        // greedy: most placed neighbors, then max degree, then min index
        for (size_t step = 0; step < sup.size(); ++step) {
            int best = -1, bestb = -1, bestd = -1;
            for (int v : sup) {
                if (chosen[v]) continue;
                int b = 0;
                for (int u : nbr[v]) b += chosen[u];
                if (b > bestb || (b == bestb && pdeg[v] > bestd)) {
                    best = v;
                    bestb = b;
                    bestd = pdeg[v];
                }
            }
            chosen[best] = 1;
            order.push_back(best);
        }
        placed_nbrs.resize(order.size());
        for (size_t i = 0; i < order.size(); ++i)
            for (size_t j = 0; j < i; ++j)
                if (p.has_edge(order[i], order[j])) placed_nbrs[i].push_back(static_cast<int>(j));
    }

    // fn: const std::vector<int>& map (pattern vertex -> host vertex, -1 for
    // isolated pattern vertices). Returns true if enumeration ran to the end.
    bool enumerate(const std::function<bool(const std::vector<int>&)>& fn) {
        if (pattern.n() > host.n()) return true;
        img_.assign(order.size(), -1);
        used_.assign(host.n(), 0);
        return dfs(0, fn);
    }

private:
    std::vector<int> img_;
    std::vector<char> used_;

    bool dfs(size_t i, const std::function<bool(const std::vector<int>&)>& fn) {
        if (i == order.size()) {
            std::vector<int> map(pattern.n(), -1);
            for (size_t j = 0; j < order.size(); ++j) map[order[j]] = img_[j];
            return fn(map);
        }
        int pv = order[i];
        for (int hv = 0; hv < host.n(); ++hv) {
            if (used_[hv] || hdeg[hv] < pdeg[pv]) continue;
            bool ok = true;
            for (int j : placed_nbrs[i])
                if (!hadj.test(hv, img_[j])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            img_[i] = hv;
            used_[hv] = 1;
            bool cont = dfs(i + 1, fn);
            used_[hv] = 0;
            img_[i] = -1;
            if (!cont) return false;
        }
        return true;
    }
};

inline void fill_isolated(const Graph& pattern, const Graph& host, std::vector<int>& map) {
    std::vector<char> used(host.n(), 0);
    for (int v : map)
        if (v >= 0) used[v] = 1;
    int next = 0;
    for (int pv = 0; pv < pattern.n(); ++pv) {
        if (map[pv] >= 0) continue;
        while (used[next]) ++next;
        map[pv] = next;
        used[next] = 1;
    }
}

}  // namespace detail

/// True iff host has a (not necessarily induced) subgraph isomorphic to
/// pattern. Isolated pattern vertices only require host vertex capacity.
inline bool contains_subgraph(const Graph& pattern, const Graph& host,
                              std::vector<int>* witness = nullptr) {
    if (pattern.n() > host.n()) return false;
    detail::SubgraphSearch search(pattern, host);
    bool found = false;
    search.enumerate([&](const std::vector<int>& map) {
        found = true;
        if (witness) {
            *witness = map;
            detail::fill_isolated(pattern, host, *witness);
        }
        return false;  // stop at first
    });
    return found;
}

/// Visit every embedding of pattern's support into host (one callback per
/// injective edge-preserving map). Return false from fn to stop early.
inline void for_each_embedding(const Graph& pattern, const Graph& host,
                               const std::function<bool(const std::vector<int>&)>& fn) {
    if (pattern.n() > host.n()) return;
    detail::SubgraphSearch search(pattern, host);
    search.enumerate(fn);
}

}  // namespace antiramsey
