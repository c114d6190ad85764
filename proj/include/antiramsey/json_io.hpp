#pragma once

#include <string>

#include <json.hpp>

#include "antiramsey/coloring.hpp"
#include "antiramsey/family.hpp"
#include "antiramsey/formulas.hpp"
#include "antiramsey/graph6.hpp"
#include "antiramsey/oracle.hpp"

namespace antiramsey {

using json = nlohmann::ordered_json;

/// Coloring document: {"n": int, "edges": [[u, v, color], ...]} sorted by
/// (u,v). The writer emits normalized colorings bit-exactly; the loader
/// rejects documents that are not total or not normalized.
inline json coloring_to_json(const ColoringOfKn& c) {
    json edges = json::array();
    for (int u = 0; u < c.n(); ++u)
        for (int v = u + 1; v < c.n(); ++v) edges.push_back({u, v, c.color_of(u, v)});
    return json{{"n", c.n()}, {"edges", std::move(edges)}};
}

inline ColoringOfKn coloring_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("coloring: expected object with 'n' and 'edges'");
    int n = j.at("n").get<int>();
    std::vector<int> colors(size_t(binom2(n)), -1);
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3)
            throw std::invalid_argument("coloring: each edge must be [u, v, color]");
        int u = e[0].get<int>(), v = e[1].get<int>(), col = e[2].get<int>();
        if (u < 0 || v <= u || v >= n) throw std::invalid_argument("coloring: bad edge endpoints");
        if (col < 0) throw std::invalid_argument("coloring: negative color");
        int idx = edge_index_of(n, u, v);
        if (colors[idx] >= 0) throw std::invalid_argument("coloring: duplicate edge entry");
        colors[idx] = col;
    }
    for (int x : colors)
        if (x < 0) throw std::invalid_argument("coloring: not a total map on the edges of K_n");
    ColoringOfKn c(n, std::move(colors));
    if (!is_normalized(c))
        throw std::invalid_argument(
            "coloring: colors are not normalized (contiguous 0..c-1 by first occurrence)");
    return c;
}

inline json family_to_json(const GraphFamily& f) {
    json arr = json::array();
    for (const auto& g : f.sorted_members()) arr.push_back(to_graph6(g));
    return arr;
}

inline json theorem_report_to_json(const TheoremReport& rep) {
    json clauses = json::array();
    for (const auto& c : rep.clauses)
        clauses.push_back(
            {{"id", c.id}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    json params{{"n", rep.params.n}, {"p", rep.params.p}, {"k", rep.params.k}};
    if (rep.params.q) params["q"] = *rep.params.q;
    return json{{"theorem", rep.theorem},
                {"params", std::move(params)},
                {"clauses", std::move(clauses)},
                {"pass", rep.pass}};
}

inline json sequence_to_json(const DecompositionSequence& seq) {
    json stages = json::array();
    for (size_t i = 0; i < seq.stages.size(); ++i) {
        const auto& st = seq.stages[i];
        stages.push_back({{"index", i},
                          {"p_used", st.p_used},
                          {"family", family_to_json(st.family)},
                          {"family_size", st.family.size()},
                          {"decomposition", family_to_json(st.decomposition)},
                          {"decomposition_size", st.decomposition.size()}});
    }
    const char* status = seq.status == SequenceStatus::completed        ? "completed"
                         : seq.status == SequenceStatus::halted_empty   ? "halted-empty"
                                                                        : "halted-edgeless";
    return json{{"p0", seq.p0},
                {"status", status},
                {"stages", std::move(stages)},
                {"final_family", family_to_json(seq.final_family)}};
}

inline json ar_result_to_json(const ArResult& r) {
    json out{{"lower", r.lower},
             {"upper", r.upper},
             {"exact", r.exact()},
             {"status", r.exact() ? "exact" : "budget-exhausted"},
             {"nodes_explored", r.nodes_explored}};
    out["witness"] = r.witness ? coloring_to_json(*r.witness) : json(nullptr);
    return out;
}

inline json qmax_to_json(const QMaxResult& r, int n, int p) {
    return json{{"q", r.q},
                {"assignment", r.assignment},
                {"n", n},
                {"q_at_n_plus_p", r.q_at_shifted},
                {"n_plus_p", n + p},
                {"stable", r.stable}};
}

inline json k5_report_to_json(const K5CheckReport& rep) {
    auto stage_json = [](const K5CheckReport::StageCheck& s) {
        return json{{"label", s.label}, {"pass", s.pass}, {"expected", s.expected},
                    {"got", s.got}};
    };
    json fwd = json::array(), back = json::array();
    for (const auto& s : rep.forward) fwd.push_back(stage_json(s));
    for (const auto& s : rep.reconstruction) back.push_back(stage_json(s));
    return json{{"forward", std::move(fwd)}, {"reconstruction", std::move(back)},
                {"pass", rep.pass}};
}

}  // namespace antiramsey
