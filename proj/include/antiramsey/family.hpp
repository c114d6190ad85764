#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "antiramsey/chromatic.hpp"
#include "antiramsey/graph.hpp"
#include "antiramsey/graph6.hpp"
#include "antiramsey/isomorphism.hpp"

namespace antiramsey {

/// Finite collection of graphs, deduplicated up to isomorphism. Members are
/// kept sorted by (n, e, canonical form) so equal families compare equal.
class GraphFamily {
public:
    GraphFamily() = default;

    explicit GraphFamily(const std::vector<Graph>& graphs) {
        for (const auto& g : graphs) insert(g);
    }

    bool insert(const Graph& g) {
        auto form = canonical_form(g);
        Key key{g.n(), g.edge_count(), std::move(form)};
        auto [it, fresh] = index_.emplace(std::move(key), members_.size());
        if (fresh) members_.push_back(g);
        return fresh;
    }

    bool contains_iso(const Graph& g) const {
        return index_.count(Key{g.n(), g.edge_count(), canonical_form(g)}) > 0;
    }

    /// Members in deterministic (n, e, canonical form) order.
    std::vector<Graph> sorted_members() const {
        std::vector<Graph> out;
        out.reserve(members_.size());
        for (const auto& [key, idx] : index_) out.push_back(members_[idx]);
        return out;
    }

    const std::vector<Graph>& members() const { return members_; }
    size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    bool same_classes(const GraphFamily& o) const {
        if (index_.size() != o.index_.size()) return false;
        auto a = index_.begin();
        auto b = o.index_.begin();
        for (; a != index_.end(); ++a, ++b)
            if (a->first != b->first) return false;
        return true;
    }

    /// Equality with every member's isolated vertices ignored.
    bool same_stripped_classes(const GraphFamily& o) const {
        return stripped().same_classes(o.stripped());
    }

    GraphFamily stripped() const {
        GraphFamily out;
        for (const auto& g : members_) out.insert(g.stripped());
        return out;
    }

private:
    using Key = std::tuple<int, int, CanonicalForm>;
    std::vector<Graph> members_;  // insertion order
    std::map<Key, size_t> index_;
};

/// F^- = {H - e : H in F, e in E(H)}, deduplicated up to isomorphism.
/// Vertices are retained.
inline GraphFamily minus_one_edge(const GraphFamily& f) {
    GraphFamily out;
    for (const auto& g : f.members()) {
        if (g.edge_count() == 0)
            throw std::invalid_argument("minus_one_edge: edgeless member " + to_graph6(g));
        for (auto e : g.edges()) out.insert(delete_edges(g, {e}));
    }
    return out;
}

/// p(F) = min chromatic number over members, minus one.
inline int subchromatic(const GraphFamily& f) {
    if (f.empty()) throw std::invalid_argument("subchromatic: empty family");
    int best = -1;
    for (const auto& g : f.members()) {
        int chi = chromatic_number(g);
        if (best < 0 || chi < best) best = chi;
    }
    return best - 1;
}

/// True iff l is a subgraph of (m ∪ K̄_t) ∨ T(t, p-1). Decided by the split
/// test: some S ⊆ V(l) has l[S] ⊆ m ∪ K̄_t and chi(l - S) <= p - 1. The host
/// is never materialized; all cross edges of the join exist, so the split
/// test is equivalent for every t >= t0 and monotone in t.
inline bool embeds_with_padding(const Graph& l, const Graph& m, int p, int t) {
    if (p < 1) throw std::invalid_argument("embeds_with_padding: p must be >= 1");
    if (t < 0) throw std::invalid_argument("embeds_with_padding: t must be >= 0");
    if (l.n() > kCanonicalMaxVertices)
        throw resource_error("embeds_with_padding: pattern exceeds vertex limit 32");
    Graph padded(m.n() + t, m.edges());
    int n = l.n();
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
        std::vector<int> inside, outside;
        for (int v = 0; v < n; ++v)
            (mask >> v & 1 ? inside : outside).push_back(v);
        if (!is_k_colorable(l.induced(outside), p - 1)) continue;
        if (contains_subgraph(l.induced(inside), padded)) return true;
    }
    return false;
}

/// Decomposition family M(f) per the split characterization: candidates are
/// the induced projections l[S] (isolated vertices stripped) over S with
/// chi(l - S) <= p - 1; the result is the set of subgraph-minimal candidates.
/// `forced_p`, when given, overrides p = subchromatic(f) (used by the frozen-p
/// sequence mode).
inline GraphFamily decomposition_family(const GraphFamily& f, std::optional<int> forced_p = {}) {
    if (f.empty()) throw std::invalid_argument("decomposition_family: empty family");
    int p = forced_p ? *forced_p : subchromatic(f);
    if (p < 1)
        throw std::invalid_argument("decomposition_family: subchromatic number must be >= 1");
    GraphFamily cand;
    for (const auto& l : f.members()) {
        int n = l.n();
        if (n > 20) throw resource_error("decomposition_family: member exceeds vertex limit 20");
        for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
            std::vector<int> inside, outside;
            for (int v = 0; v < n; ++v)
                (mask >> v & 1 ? inside : outside).push_back(v);
            if (!is_k_colorable(l.induced(outside), p - 1)) continue;
            cand.insert(l.induced(inside).stripped());
        }
    }
    // retain subgraph-minimal candidates
    auto cs = cand.sorted_members();  // ascending (n, e, form): potential subgraphs come first
    GraphFamily minimal;
    for (size_t i = 0; i < cs.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < cs.size() && !dominated; ++j) {
            if (j == i) continue;
            if (cs[j].edge_count() > cs[i].edge_count()) continue;
            if (cs[j].edge_count() == cs[i].edge_count() && cs[j].n() >= cs[i].n()) continue;
            if (contains_subgraph(cs[j], cs[i])) dominated = true;
        }
        if (!dominated) minimal.insert(cs[i]);
    }
    return minimal;
}

/// Decomposition-remainder family {F - E(M) : F in f, M in m, M ⊆ F}, ranging
/// over every embedding of M into F (deduplicated by the resulting class).
/// Vertices are retained. May be empty if no M embeds.
inline GraphFamily decomposition_remainder(const GraphFamily& f, const GraphFamily& m) {
    GraphFamily out;
    for (const auto& big : f.members()) {
        for (const auto& pat : m.members()) {
            std::set<std::vector<Edge>> images;
            for_each_embedding(pat, big, [&](const std::vector<int>& map) {
                std::vector<Edge> img;
                img.reserve(pat.edges().size());
                for (auto [u, v] : pat.edges()) {
                    int a = map[u], b = map[v];
                    img.emplace_back(std::min(a, b), std::max(a, b));
                }
                std::sort(img.begin(), img.end());
                images.insert(std::move(img));
                return true;
            });
            for (const auto& img : images) out.insert(delete_edges(big, img));
        }
    }
    return out;
}

enum class SequenceStatus { completed, halted_empty, halted_edgeless };

struct DecompositionSequence {
    struct Stage {
        GraphFamily family;         // F_i
        GraphFamily decomposition;  // M_i
        int p_used;
    };
    std::vector<Stage> stages;
    GraphFamily final_family;  // family after the last recorded remainder
    int p0 = 0;
    SequenceStatus status = SequenceStatus::completed;
};

/// Iterate decomposition_family / decomposition_remainder starting from f.
/// Default length is p(F_0)+1 recorded decompositions (Def-style M_0..M_p).
/// By default p is re-evaluated per stage as subchromatic(F_i), which is the
/// literal reading of M(F_i); freeze_p pins it at p(F_0) instead.
inline DecompositionSequence decomposition_sequence(const GraphFamily& f,
                                                    std::optional<int> length = {},
                                                    bool freeze_p = false) {
    if (f.empty()) throw std::invalid_argument("decomposition_sequence: empty family");
    DecompositionSequence seq;
    seq.p0 = subchromatic(f);
    int stages = length ? *length : seq.p0 + 1;
    GraphFamily cur = f;
    for (int i = 0; i < stages; ++i) {
        if (cur.empty()) {
            seq.status = SequenceStatus::halted_empty;
            break;
        }
        bool edgeless = false;
        for (const auto& g : cur.members())
            if (g.edge_count() == 0) edgeless = true;
        if (edgeless) {
            seq.status = SequenceStatus::halted_edgeless;
            break;
        }
        int p = freeze_p ? seq.p0 : subchromatic(cur);
        GraphFamily m = decomposition_family(cur, freeze_p ? std::optional<int>(seq.p0)
                                                           : std::nullopt);
        seq.stages.push_back({cur, m, p});
        cur = decomposition_remainder(cur, m);
    }
    seq.final_family = cur;
    return seq;
}

/// All isomorphism classes with n vertices and e edges, built by iterated
/// one-edge extension with canonical deduplication. Documented limit n <= 7.
inline GraphFamily all_graphs(int n, int e) {
    if (n < 0 || n > 7) throw resource_error("all_graphs: documented limit n <= 7");
    if (e < 0 || e > binom2(n)) throw std::invalid_argument("all_graphs: bad edge count");
    GraphFamily cur(std::vector<Graph>{Graph(n, {})});
    for (int round = 0; round < e; ++round) {
        GraphFamily next;
        for (const auto& g : cur.members()) {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (g.has_edge(u, v)) continue;
                    auto es = g.edges();
                    es.emplace_back(u, v);
                    next.insert(Graph(n, std::move(es)));
                }
        }
        cur = std::move(next);
    }
    return cur;
}

/// Replay of the proposition that K5 is determined by its decomposition
/// family sequence. The forward direction computes the sequence of {K5} and
/// compares it stage by stage (families as-is, decompositions with isolated
/// vertices ignored) against the published table M_0..M_3 = {K2}, {K2},
/// {S3, M4}, G(5,6); the reconstruction direction starts from that table and
/// confirms the remainder chain G(5,10) -> G(5,9) -> G(5,8) -> G(5,6).
struct K5CheckReport {
    struct StageCheck {
        std::string label;
        bool pass;
        std::string expected;
        std::string got;
    };
    std::vector<StageCheck> forward;
    std::vector<StageCheck> reconstruction;
    bool pass = false;
};

namespace detail {
inline std::string family_brief(const GraphFamily& fam) {
    std::string s = "{";
    for (const auto& g : fam.sorted_members()) {
        if (s.size() > 1) s += ", ";
        s += to_graph6(g);
    }
    return s + "}";
}
}  // namespace detail

inline K5CheckReport k5_determination_check() {
    K5CheckReport rep;
    const GraphFamily k2({matching(2)});
    GraphFamily s3m4;
    s3m4.insert(star(3));
    s3m4.insert(matching(4));
    const std::vector<GraphFamily> expect_m{k2, k2, s3m4, all_graphs(5, 6)};
    const std::vector<GraphFamily> expect_f{all_graphs(5, 10), all_graphs(5, 9), all_graphs(5, 8),
                                            all_graphs(5, 6)};

    auto seq = decomposition_sequence(GraphFamily({complete(5)}), 4);
    for (int i = 0; i < 4; ++i) {
        bool have = i < static_cast<int>(seq.stages.size());
        bool f_ok = have && seq.stages[i].family.same_classes(expect_f[i]);
        rep.forward.push_back({"F_" + std::to_string(i), f_ok, detail::family_brief(expect_f[i]),
                               have ? detail::family_brief(seq.stages[i].family) : "<missing>"});
        bool m_ok = have && seq.stages[i].decomposition.same_stripped_classes(expect_m[i]);
        rep.forward.push_back({"M_" + std::to_string(i), m_ok, detail::family_brief(expect_m[i]),
                               have ? detail::family_brief(seq.stages[i].decomposition)
                                    : "<missing>"});
    }

    // reconstruction: with the published M_i pinned, each G(5,e) maps onto the
    // next G(5,e') under the remainder, and G(5,10) = {K5}
    const int edge_counts[] = {10, 9, 8, 6};
    for (int i = 0; i < 4; ++i) {
        if (i < 3) {
            auto got = decomposition_remainder(expect_f[i], expect_m[i]);
            bool ok = got.same_classes(expect_f[i + 1]);
            rep.reconstruction.push_back(
                {"G(5," + std::to_string(edge_counts[i]) + ") -> G(5," +
                     std::to_string(edge_counts[i + 1]) + ")",
                 ok, detail::family_brief(expect_f[i + 1]), detail::family_brief(got)});
        } else {
            bool ok = expect_f[0].size() == 1 && expect_f[0].contains_iso(complete(5));
            rep.reconstruction.push_back({"G(5,10) = {K5}", ok, "{K5}",
                                          detail::family_brief(expect_f[0])});
        }
    }

    rep.pass = true;
    for (const auto& c : rep.forward) rep.pass = rep.pass && c.pass;
    for (const auto& c : rep.reconstruction) rep.pass = rep.pass && c.pass;
    return rep;
}

}  // namespace antiramsey
