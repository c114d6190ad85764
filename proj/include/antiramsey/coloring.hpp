#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "antiramsey/family.hpp"
#include "antiramsey/gadgets.hpp"
#include "antiramsey/graph.hpp"

namespace antiramsey {

/// Lexicographic rank of edge (u,v) among the C(n,2) edges of K_n.
inline int edge_index_of(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n || u == v) throw std::invalid_argument("edge_index_of: bad edge");
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

/// Total edge-coloring of K_n: a color id for each of the C(n,2) edges,
/// indexed in lexicographic (u,v) order.
class ColoringOfKn {
public:
    ColoringOfKn() = default;

    ColoringOfKn(int n, std::vector<int> colors) : n_(n), colors_(std::move(colors)) {
        if (n_ < 0) throw std::invalid_argument("ColoringOfKn: negative n");
        if (static_cast<long long>(colors_.size()) != binom2(n_))
            throw std::invalid_argument("ColoringOfKn: expected exactly C(n,2) edge colors");
        for (int c : colors_)
            if (c < 0) throw std::invalid_argument("ColoringOfKn: negative color id");
    }

    int n() const { return n_; }
    long long edge_total() const { return binom2(n_); }

    int edge_index(int u, int v) const { return edge_index_of(n_, u, v); }

    int color_of(int u, int v) const { return colors_[edge_index(u, v)]; }
    const std::vector<int>& colors() const { return colors_; }

    Edge edge_at(int idx) const {
        for (int u = 0; u < n_; ++u) {
            int row = n_ - u - 1;
            if (idx < row) return {u, u + 1 + idx};
            idx -= row;
        }
        throw std::invalid_argument("edge_at: index out of range");
    }

    bool operator==(const ColoringOfKn& o) const { return n_ == o.n_ && colors_ == o.colors_; }

private:
    int n_ = 0;
    std::vector<int> colors_;
};

inline int num_colors(const ColoringOfKn& c) {
    int mx = -1;
    for (int x : c.colors()) mx = std::max(mx, x);
    std::vector<char> seen(mx + 1, 0);
    int count = 0;
    for (int x : c.colors()) count += !std::exchange(seen[x], char(1));
    return count;
}

/// Relabel colors to 0..c-1 by first occurrence in lexicographic edge order.
inline ColoringOfKn normalize(const ColoringOfKn& c) {
    std::map<int, int> remap;
    std::vector<int> out;
    out.reserve(c.colors().size());
    for (int x : c.colors()) {
        auto [it, fresh] = remap.emplace(x, static_cast<int>(remap.size()));
        out.push_back(it->second);
    }
    return ColoringOfKn(c.n(), std::move(out));
}

inline bool is_normalized(const ColoringOfKn& c) { return normalize(c) == c; }

// -- representing graphs -------------------------------------------------------

struct RepresentingGraph {
    Graph graph;
    std::map<int, Edge> chosen_edge_per_color;
};

/// One edge per color; lexicographic-first policy picks the smallest edge of
/// each color class in edge order.
inline RepresentingGraph representing_graph(const ColoringOfKn& c) {
    std::map<int, Edge> chosen;
    for (long long i = 0; i < c.edge_total(); ++i) {
        int col = c.colors()[i];
        if (!chosen.count(col)) chosen[col] = c.edge_at(static_cast<int>(i));
    }
    std::vector<Edge> es;
    for (auto& [col, e] : chosen) es.push_back(e);
    return {Graph(c.n(), std::move(es)), std::move(chosen)};
}

/// Enumerate every representing graph (the product of color-class sizes many).
/// fn returns false to stop. Products above `bound` raise resource_error.
inline void for_each_representing(const ColoringOfKn& c,
                                  const std::function<bool(const RepresentingGraph&)>& fn,
                                  long long bound = 1'000'000) {
    std::map<int, std::vector<Edge>> classes;
    for (long long i = 0; i < c.edge_total(); ++i)
        classes[c.colors()[i]].push_back(c.edge_at(static_cast<int>(i)));
    long long product = 1;
    for (auto& [col, es] : classes) {
        product *= static_cast<long long>(es.size());
        if (product > bound)
            throw resource_error("for_each_representing: class-size product exceeds bound");
    }
    std::vector<const std::vector<Edge>*> lists;
    std::vector<int> cols;
    for (auto& [col, es] : classes) {
        lists.push_back(&es);
        cols.push_back(col);
    }
    std::vector<size_t> odo(lists.size(), 0);
    while (true) {
        std::map<int, Edge> chosen;
        std::vector<Edge> es;
        for (size_t i = 0; i < lists.size(); ++i) {
            chosen[cols[i]] = (*lists[i])[odo[i]];
            es.push_back((*lists[i])[odo[i]]);
        }
        RepresentingGraph rg{Graph(c.n(), std::move(es)), std::move(chosen)};
        if (!fn(rg)) return;
        size_t i = 0;
        while (i < odo.size() && ++odo[i] == lists[i]->size()) odo[i++] = 0;
        if (i == odo.size()) return;
    }
}

// -- rainbow detection ----------------------------------------------------------

/// True iff some embedding of pattern into K_n uses pairwise-distinct edge
/// colors. Pattern vertices are assigned in index order with host images tried
/// ascending, so the witness (pattern vertex -> host vertex) is the
/// lexicographically first one. Practical limits: v(pattern) <= 16, n <= 32.
inline bool has_rainbow_copy(const ColoringOfKn& c, const Graph& pattern,
                             std::vector<int>* witness = nullptr) {
    int pv = pattern.n();
    if (pv > c.n()) return false;
    if (pv > 16 || c.n() > 32)
        throw resource_error("has_rainbow_copy: documented limits v(pattern) <= 16, n <= 32");
    int ncolors = 0;
    for (int x : c.colors()) ncolors = std::max(ncolors, x + 1);
    std::vector<int> mult(ncolors, 0);
    for (int x : c.colors()) ++mult[x];

    // back-edges of pattern vertex v to lower-indexed vertices
    std::vector<std::vector<int>> back(pv);
    for (auto [a, b] : pattern.edges()) back[b].push_back(a);

    std::vector<int> img(pv, -1);
    std::vector<char> used_host(c.n(), 0);
    std::vector<char> used_color(ncolors, 0);
    std::vector<int> marked;  // scratch for the current placement attempt

    std::function<bool(int)> dfs = [&](int v) -> bool {
        if (v == pv) {
            if (witness) *witness = img;
            return true;
        }
        for (int hv = 0; hv < c.n(); ++hv) {
            if (used_host[hv]) continue;
            marked.clear();
            bool ok = true;
            for (int u : back[v]) {
                int col = c.color_of(img[u], hv);
                if (mult[col] < 2) continue;  // a unique color can never repeat
                if (used_color[col]) {
                    ok = false;
                    break;
                }
                used_color[col] = 1;
                marked.push_back(col);
            }
            if (ok) {
                img[v] = hv;
                used_host[hv] = 1;
                std::vector<int> saved = marked;
                if (dfs(v + 1)) return true;
                used_host[hv] = 0;
                img[v] = -1;
                for (int col : saved) used_color[col] = 0;
            } else {
                for (int col : marked) used_color[col] = 0;
            }
        }
        return false;
    };
    return dfs(0);
}

/// No rainbow copy of any member. Members larger than n cannot embed and are
/// vacuously avoided.
inline bool is_family_free(const ColoringOfKn& c, const GraphFamily& f) {
    for (const auto& g : f.members())
        if (has_rainbow_copy(c, g)) return false;
    return true;
}

// -- extremal-coloring constructors ---------------------------------------------

namespace detail {

// Contiguous vertex classes: class i occupies [offsets[i], offsets[i+1]).
inline std::vector<int> class_offsets(const std::vector<int>& sizes, int base = 0) {
    std::vector<int> off{base};
    for (int s : sizes) off.push_back(off.back() + s);
    return off;
}

inline int class_of(const std::vector<int>& offsets, int v) {
    for (size_t i = 0; i + 1 < offsets.size(); ++i)
        if (v >= offsets[i] && v < offsets[i + 1]) return static_cast<int>(i);
    return -1;
}

}  // namespace detail

/// Rainbow T(n,p) plus one extra color on all intra-class edges. Degenerate
/// when no class has two vertices (the extra color then never appears).
inline ColoringOfKn construct_kp_extremal(int n, int p) {
    if (p < 2 || n < p) throw std::invalid_argument("construct_kp_extremal: need n >= p >= 2");
    auto off = detail::class_offsets(turan_sizes(n, p));
    std::vector<int> colors(size_t(binom2(n)));
    int next = 0;
    const int extra = static_cast<int>(turan_count(n, p));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            colors[edge_index_of(n, u, v)] =
                detail::class_of(off, u) == detail::class_of(off, v) ? extra : next++;
    return normalize(ColoringOfKn(n, std::move(colors)));
}

/// Rainbow H(n,p,k-1) = K_{k-2} ∨ T(n-k+2,p) plus one extra color on the
/// complement (the intra-class edges of the Turan part).
inline ColoringOfKn construct_thm18_ii(int n, int p, int k) {
    if (p < 2 || k < 2) throw std::invalid_argument("construct_thm18_ii: need p >= 2, k >= 2");
    int interior = k - 2;
    if (n - interior < p)
        throw std::invalid_argument("construct_thm18_ii: Turan part is degenerate");
    auto off = detail::class_offsets(turan_sizes(n - interior, p), interior);
    std::vector<int> colors(size_t(binom2(n)));
    int next = 0;
    const int extra = 1 << 30;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool intra = u >= interior && v >= interior &&
                         detail::class_of(off, u) == detail::class_of(off, v);
            colors[edge_index_of(n, u, v)] = intra ? extra : next++;
        }
    return normalize(ColoringOfKn(n, std::move(colors)));
}

/// Label slots of the thm 1.8(i) construction: one per Turan class, plus one
/// for the K̄_{k-2} interior when it has at least two vertices.
inline int thm18_i_slot_count(int p, int k) { return p + (k - 2 >= 2 ? 1 : 0); }

/// Rainbow H'(n,p,k-1) = K̄_{k-2} ∨ T(n-k+2,p); complement edges colored by
/// the slot labels: intra-class edges of class i get labels[i], interior
/// edges (when present) get labels[p]. Distinct labels become distinct extra
/// colors.
inline ColoringOfKn construct_thm18_i(int n, int p, int k, const std::vector<int>& labels) {
    if (p < 2 || k < 2) throw std::invalid_argument("construct_thm18_i: need p >= 2, k >= 2");
    int interior = k - 2;
    if (n - interior < p)
        throw std::invalid_argument("construct_thm18_i: Turan part is degenerate");
    int slots = thm18_i_slot_count(p, k);
    if (static_cast<int>(labels.size()) != slots)
        throw std::invalid_argument("construct_thm18_i: expected one label per slot (" +
                                    std::to_string(slots) + ")");
    for (int x : labels)
        if (x < 0 || x > 1'000'000)
            throw std::invalid_argument("construct_thm18_i: label out of range");
    auto off = detail::class_offsets(turan_sizes(n - interior, p), interior);
    std::vector<int> colors(size_t(binom2(n)));
    int next = 0;
    const int extra_base = 1 << 30;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int slot = -1;
            if (v < interior) {
                slot = p;  // interior pair; slot exists because interior >= 2
            } else if (u >= interior) {
                int cu = detail::class_of(off, u), cv = detail::class_of(off, v);
                if (cu == cv) slot = cu;
            }
            colors[edge_index_of(n, u, v)] = slot < 0 ? next++ : extra_base + labels[slot];
        }
    return normalize(ColoringOfKn(n, std::move(colors)));
}

/// Options for the C/C' coloring classes. Gadgets are (k-1)-regular
/// triangle-free (class U') unless allow_triangles (class U).
struct CprimeOptions {
    std::optional<std::vector<int>> sizes;  // class sizes n_1 >= ... >= n_p, else balanced
    bool allow_triangles = false;
};

/// A coloring from C'(n,k,p): rainbow on all cross edges and on a per-class
/// (k-1)-regular triangle-free gadget, plus p extra colors, one per class, on
/// the remaining intra-class edges. For the theorem-1.12 value at parameter k
/// call with k-1 (gadget degree k-2).
inline ColoringOfKn construct_cprime(int n, int k, int p, const CprimeOptions& opt = {}) {
    if (p < 1 || k < 1) throw std::invalid_argument("construct_cprime: need p >= 1, k >= 1");
    std::vector<int> sizes = opt.sizes ? *opt.sizes : turan_sizes(n, p);
    if (static_cast<int>(sizes.size()) != p)
        throw std::invalid_argument("construct_cprime: expected p class sizes");
    long long total = 0;
    for (int s : sizes) total += s;
    if (total != n) throw std::invalid_argument("construct_cprime: class sizes must sum to n");
    if (opt.sizes) {
        for (size_t i = 0; i + 1 < sizes.size(); ++i)
            if (sizes[i] < sizes[i + 1])
                throw std::invalid_argument("construct_cprime: sizes must be non-increasing");
        if (sizes.front() - sizes.back() != 2)
            throw std::invalid_argument("construct_cprime: sizes variant needs n_1 - n_p = 2");
        if (k % 2 == 0 && (sizes.front() % 2 != 0 || sizes.back() % 2 != 0))
            throw std::invalid_argument(
                "construct_cprime: n_1 and n_p must be even when k is even");
    }
    int d = k - 1;
    auto off = detail::class_offsets(sizes);
    std::vector<Edge> gadget_edges;
    for (int i = 0; i < p; ++i) {
        Graph gad = regular_graph(sizes[i], d, opt.allow_triangles);
        for (auto [u, v] : gad.edges()) gadget_edges.emplace_back(off[i] + u, off[i] + v);
    }
    std::sort(gadget_edges.begin(), gadget_edges.end());
    std::vector<int> colors(size_t(binom2(n)));
    int next = 0;
    const int extra_base = 1 << 30;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int cu = detail::class_of(off, u), cv = detail::class_of(off, v);
            bool rainbow = cu != cv || std::binary_search(gadget_edges.begin(),
                                                          gadget_edges.end(), Edge{u, v});
            colors[edge_index_of(n, u, v)] = rainbow ? next++ : extra_base + cu;
        }
    return normalize(ColoringOfKn(n, std::move(colors)));
}

/// The exceptional theorem-1.12(ii) coloring for k=3, p=2, n ≡ 2 (mod 4):
/// rainbow T(n,2) plus a rainbow 2-regular gadget (from the class U, so
/// triangles would be permitted) in the largest class, and ONE extra color on
/// every remaining intra-class edge. Total colors t(n,2) + n/2 + 1.
inline ColoringOfKn construct_exceptional_k3(int n) {
    if (n < 10 || n % 4 != 2)
        throw std::invalid_argument("construct_exceptional_k3: need n >= 10 with n = 2 mod 4");
    auto sizes = turan_sizes(n, 2);
    auto off = detail::class_offsets(sizes);
    Graph gad = regular_graph(sizes[0], 2, /*allow_triangles=*/true);
    std::vector<Edge> gadget_edges;
    for (auto [u, v] : gad.edges()) gadget_edges.emplace_back(off[0] + u, off[0] + v);
    std::sort(gadget_edges.begin(), gadget_edges.end());
    std::vector<int> colors(size_t(binom2(n)));
    int next = 0;
    const int extra = 1 << 30;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int cu = detail::class_of(off, u), cv = detail::class_of(off, v);
            bool rainbow = cu != cv || std::binary_search(gadget_edges.begin(),
                                                          gadget_edges.end(), Edge{u, v});
            colors[edge_index_of(n, u, v)] = rainbow ? next++ : extra;
        }
    return normalize(ColoringOfKn(n, std::move(colors)));
}

// -- q maximization --------------------------------------------------------------

struct QMaxResult {
    int q = 0;                          // 0 means no slot assignment is F-free
    std::vector<int> assignment;        // labels per slot witnessing q
    int q_at_shifted = 0;               // the same search at n + p
    bool stable = false;                // q == q_at_shifted
};

namespace detail {

inline void restricted_growth_strings(int len, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> s(len, 0);
    std::function<void(int, int)> rec = [&](int i, int mx) {
        if (i == len) {
            fn(s);
            return;
        }
        for (int v = 0; v <= mx + 1; ++v) {
            s[i] = v;
            rec(i + 1, std::max(mx, v));
        }
    };
    if (len > 0) rec(0, -1);
}

inline int qmax_at(int n, int p, int k, const GraphFamily& f, std::vector<int>* witness) {
    int slots = thm18_i_slot_count(p, k);
    std::vector<std::vector<int>> all;
    restricted_growth_strings(slots, [&](const std::vector<int>& s) { all.push_back(s); });
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        int ba = *std::max_element(a.begin(), a.end()) + 1;
        int bb = *std::max_element(b.begin(), b.end()) + 1;
        return ba > bb;  // most distinct labels first
    });
    for (const auto& s : all) {
        ColoringOfKn c = construct_thm18_i(n, p, k, s);
        if (is_family_free(c, f)) {
            if (witness) *witness = s;
            return *std::max_element(s.begin(), s.end()) + 1;
        }
    }
    if (witness) witness->clear();
    return 0;
}

}  // namespace detail

/// Maximum number of distinct extra labels over all slot assignments of the
/// thm 1.8(i) construction that stay F-free, searched finest-to-coarsest.
/// Also evaluated at n + p as a stability indicator: the theorem's q is
/// defined for sufficiently large n, so agreement between the two values is
/// reported rather than a claim about the limit.
inline QMaxResult max_extra_colors(int n, int p, int k, const GraphFamily& f) {
    QMaxResult r;
    r.q = detail::qmax_at(n, p, k, f, &r.assignment);
    r.q_at_shifted = detail::qmax_at(n + p, p, k, f, nullptr);
    r.stable = r.q == r.q_at_shifted;
    return r;
}

}  // namespace antiramsey
