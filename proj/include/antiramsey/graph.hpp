#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace antiramsey {

/// Thrown when an operation exceeds a documented size or search limit.
/// Limits always fail loudly; no operation degrades to an approximate answer.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

using Edge = std::pair<int, int>;

/// Labeled simple undirected graph: vertex count plus a sorted set of edges
/// (u,v) with 0 <= u < v < n. Immutable value type; equal graphs compare equal.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        if (n_ < 0) throw std::invalid_argument("Graph: negative vertex count");
        for (auto& [u, v] : edges_) {
            if (u > v) std::swap(u, v);
            if (u == v) throw std::invalid_argument("Graph: self-loop");
            if (u < 0 || v >= n_) throw std::invalid_argument("Graph: edge endpoint out of range");
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw std::invalid_argument("Graph: duplicate edge");
    }

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
    }

    std::vector<int> degrees() const {
        std::vector<int> d(n_, 0);
        for (auto [u, v] : edges_) { ++d[u]; ++d[v]; }
        return d;
    }

    /// Vertices incident to at least one edge, ascending.
    std::vector<int> support() const {
        std::vector<char> hit(n_, 0);
        for (auto [u, v] : edges_) hit[u] = hit[v] = 1;
        std::vector<int> s;
        for (int v = 0; v < n_; ++v)
            if (hit[v]) s.push_back(v);
        return s;
    }

    /// Same edge structure with isolated vertices removed (labels compacted).
    Graph stripped() const {
        auto s = support();
        std::vector<int> remap(n_, -1);
        for (size_t i = 0; i < s.size(); ++i) remap[s[i]] = static_cast<int>(i);
        std::vector<Edge> es;
        es.reserve(edges_.size());
        for (auto [u, v] : edges_) es.emplace_back(remap[u], remap[v]);
        return Graph(static_cast<int>(s.size()), std::move(es));
    }

    /// Induced subgraph on `verts` (ascending labels preserved in given order).
    Graph induced(const std::vector<int>& verts) const {
        std::vector<int> remap(n_, -1);
        for (size_t i = 0; i < verts.size(); ++i) {
            int v = verts[i];
            if (v < 0 || v >= n_) throw std::invalid_argument("induced: vertex out of range");
            remap[v] = static_cast<int>(i);
        }
        std::vector<Edge> es;
        for (auto [u, v] : edges_)
            if (remap[u] >= 0 && remap[v] >= 0)
                es.emplace_back(remap[u], remap[v]);
        return Graph(static_cast<int>(verts.size()), std::move(es));
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

/// Adjacency bitrows for fast neighborhood tests. Guarded: n*n bits of memory.
class AdjBits {
public:
    explicit AdjBits(const Graph& g) : n_(g.n()), words_((g.n() + 63) / 64), rows_(size_t(g.n()) * words_, 0) {
        if (g.n() > kMaxN)
            throw resource_error("AdjBits: graph too large (n > " + std::to_string(kMaxN) + ")");
        for (auto [u, v] : g.edges()) { set(u, v); set(v, u); }
    }

    bool test(int u, int v) const { return rows_[size_t(u) * words_ + v / 64] >> (v % 64) & 1; }
    int n() const { return n_; }

    static constexpr int kMaxN = 4096;

private:
    void set(int u, int v) { rows_[size_t(u) * words_ + v / 64] |= uint64_t(1) << (v % 64); }
    int n_;
    int words_;
    std::vector<uint64_t> rows_;
};

inline long long binom2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

namespace detail {
// Construction guard: keep materialized edge sets sane.
constexpr long long kMaxEdges = 8'000'000;
inline void check_edges(long long m, const char* who) {
    if (m > kMaxEdges)
        throw resource_error(std::string(who) + ": too many edges to materialize");
}
}  // namespace detail

// -- standard constructors ---------------------------------------------------

inline Graph complete(int n) {
    if (n < 0) throw std::invalid_argument("complete: negative count");
    detail::check_edges(binom2(n), "complete");
    std::vector<Edge> es;
    es.reserve(size_t(binom2(n)));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

inline Graph path(int k) {
    if (k < 0) throw std::invalid_argument("path: negative count");
    std::vector<Edge> es;
    for (int v = 0; v + 1 < k; ++v) es.emplace_back(v, v + 1);
    return Graph(k, std::move(es));
}

inline Graph cycle(int k) {
    if (k < 0) throw std::invalid_argument("cycle: negative count");
    if (k < 3) return Graph(k, {});  // degenerate: no cycle exists
    std::vector<Edge> es;
    for (int v = 0; v + 1 < k; ++v) es.emplace_back(v, v + 1);
    es.emplace_back(0, k - 1);
    return Graph(k, std::move(es));
}

/// S_k: star on k vertices (center 0, k-1 leaves).
inline Graph star(int k) {
    if (k < 0) throw std::invalid_argument("star: negative count");
    std::vector<Edge> es;
    for (int v = 1; v < k; ++v) es.emplace_back(0, v);
    return Graph(k, std::move(es));
}

/// M_k: floor(k/2) disjoint edges on k vertices (one isolated vertex if k odd).
inline Graph matching(int k) {
    if (k < 0) throw std::invalid_argument("matching: negative count");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < k; i += 2) es.emplace_back(i, i + 1);
    return Graph(k, std::move(es));
}

inline Graph complete_multipartite(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("complete_multipartite: no parts");
    long long n = 0;
    for (int s : sizes) {
        if (s < 0) throw std::invalid_argument("complete_multipartite: negative part size");
        n += s;
    }
    long long m = binom2(n);
    for (int s : sizes) m -= binom2(s);
    detail::check_edges(m, "complete_multipartite");
    std::vector<int> cls;
    for (size_t i = 0; i < sizes.size(); ++i)
        cls.insert(cls.end(), sizes[i], static_cast<int>(i));
    std::vector<Edge> es;
    es.reserve(size_t(m));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (cls[u] != cls[v]) es.emplace_back(u, v);
    return Graph(static_cast<int>(n), std::move(es));
}

/// Part sizes of T(n,p): descending, differing by at most one.
inline std::vector<int> turan_sizes(int n, int p) {
    if (p < 1) throw std::invalid_argument("turan: p must be >= 1");
    if (n < 0) throw std::invalid_argument("turan: negative n");
    std::vector<int> sizes(p, n / p);
    for (int i = 0; i < n % p; ++i) ++sizes[i];
    return sizes;
}

inline Graph turan(int n, int p) { return complete_multipartite(turan_sizes(n, p)); }

inline long long turan_count(int n, int p) {
    auto sizes = turan_sizes(n, p);
    long long m = binom2(n);
    for (int s : sizes) m -= binom2(s);
    return m;
}

// -- graph algebra -----------------------------------------------------------

inline Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<Edge> es = g.edges();
    for (auto [u, v] : h.edges()) es.emplace_back(u + g.n(), v + g.n());
    return Graph(g.n() + h.n(), std::move(es));
}

/// g ∨ h: disjoint union plus all cross edges.
inline Graph join(const Graph& g, const Graph& h) {
    detail::check_edges(static_cast<long long>(g.edge_count()) + h.edge_count() +
                            static_cast<long long>(g.n()) * h.n(),
                        "join");
    std::vector<Edge> es = g.edges();
    for (auto [u, v] : h.edges()) es.emplace_back(u + g.n(), v + g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < h.n(); ++v) es.emplace_back(u, g.n() + v);
    return Graph(g.n() + h.n(), std::move(es));
}

inline Graph complement(const Graph& g) {
    detail::check_edges(binom2(g.n()), "complement");
    std::vector<Edge> es;
    es.reserve(size_t(binom2(g.n()) - g.edge_count()));
    auto it = g.edges().begin();
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (it != g.edges().end() && *it == Edge{u, v}) {
                ++it;
            } else {
                es.emplace_back(u, v);
            }
        }
    return Graph(g.n(), std::move(es));
}

/// k·g: k vertex-disjoint copies.
inline Graph copies(int k, const Graph& g) {
    if (k < 0) throw std::invalid_argument("copies: negative count");
    detail::check_edges(static_cast<long long>(k) * g.edge_count(), "copies");
    std::vector<Edge> es;
    es.reserve(size_t(k) * g.edges().size());
    for (int i = 0; i < k; ++i)
        for (auto [u, v] : g.edges()) es.emplace_back(u + i * g.n(), v + i * g.n());
    return Graph(k * g.n(), std::move(es));
}

inline Graph delete_edges(const Graph& g, const std::vector<Edge>& remove) {
    auto es = g.edges();
    for (auto e : remove) {
        if (e.first > e.second) std::swap(e.first, e.second);
        auto it = std::find(es.begin(), es.end(), e);
        if (it == es.end())
            throw std::invalid_argument("delete_edges: edge (" + std::to_string(e.first) + "," +
                                        std::to_string(e.second) + ") not present");
        es.erase(it);
    }
    return Graph(g.n(), std::move(es));
}

// -- named graphs from the problem domain --------------------------------------

/// k triangles sharing one common vertex (2k+1 vertices).
inline Graph fan(int k) {
    if (k < 1) throw std::invalid_argument("fan: k must be >= 1");
    return join(complete(1), copies(k, complete(2)));
}

/// k copies of K_{p+1} sharing one common vertex (pk+1 vertices).
inline Graph general_fan(int k, int p) {
    if (k < 1 || p < 1) throw std::invalid_argument("general_fan: k and p must be >= 1");
    return join(complete(1), copies(k, complete(p)));
}

/// Q(p,k) = K_1 ∨ T(pk,p).
inline Graph q_graph(int p, int k) {
    if (k < 1 || p < 1) throw std::invalid_argument("q_graph: k and p must be >= 1");
    return join(complete(1), turan(p * k, p));
}

/// Kneser(5,2): vertices are 2-subsets of {0..4} in lexicographic order,
/// adjacent iff disjoint. 10 vertices, 15 edges, 3-regular, girth 5.
inline Graph petersen() {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
    std::vector<Edge> es;
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            auto [a, b] = pairs[i];
            auto [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d) es.emplace_back(i, j);
        }
    return Graph(10, std::move(es));
}

// -- edge-count formulas -------------------------------------------------------

namespace detail {
inline void check_hpk(int n, int p, int k, const char* who) {
    if (p < 1) throw std::invalid_argument(std::string(who) + ": p must be >= 1");
    if (k < 1 || k > n + 1) throw std::invalid_argument(std::string(who) + ": need 1 <= k <= n+1");
}
}  // namespace detail

/// e(H(n,p,k)) with H(n,p,k) = K_{k-1} ∨ T(n-k+1,p).
inline long long h_count(int n, int p, int k) {
    detail::check_hpk(n, p, k, "h_count");
    long long a = k - 1, b = n - k + 1;
    return binom2(a) + a * b + turan_count(static_cast<int>(b), p);
}

/// e(H'(n,p,k)) with H'(n,p,k) = K̄_{k-1} ∨ T(n-k+1,p).
inline long long h_prime_count(int n, int p, int k) {
    detail::check_hpk(n, p, k, "h_prime_count");
    long long a = k - 1, b = n - k + 1;
    return a * b + turan_count(static_cast<int>(b), p);
}

/// t(n,p) - sum of C(|s_i|,2), where the deviations s_i pair the given class
/// sizes against the balanced sizes in sorted order (which minimizes the sum).
inline long long simonovits_bound(int n, int p, std::vector<int> class_sizes) {
    if (static_cast<int>(class_sizes.size()) != p)
        throw std::invalid_argument("simonovits_bound: expected exactly p class sizes");
    long long total = 0;
    for (int c : class_sizes) {
        if (c < 0) throw std::invalid_argument("simonovits_bound: negative class size");
        total += c;
    }
    if (total != n) throw std::invalid_argument("simonovits_bound: class sizes must sum to n");
    auto balanced = turan_sizes(n, p);
    std::sort(class_sizes.begin(), class_sizes.end(), std::greater<>());
    long long bound = turan_count(n, p);
    for (int i = 0; i < p; ++i) bound -= binom2(std::abs(class_sizes[i] - balanced[i]));
    return bound;
}

}  // namespace antiramsey
