// Command-line front end: graph-expression parsing, decomposition machinery,
// the exact anti-Ramsey oracle, formula evaluation, extremal-coloring
// construction and verification.
//
// Exit codes: 0 success, 1 check failed, 2 usage error, 3 resource limit.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "antiramsey/expr.hpp"
#include "antiramsey/family.hpp"
#include "antiramsey/formulas.hpp"
#include "antiramsey/graph6.hpp"
#include "antiramsey/json_io.hpp"
#include "antiramsey/oracle.hpp"

using namespace antiramsey;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

GraphFamily load_family(const std::string& file, const std::string& expr) {
    if (!file.empty() && !expr.empty())
        throw std::invalid_argument("give either --family or --expr, not both");
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open family file: " + file);
        auto graphs = read_graph6_lines(in);
        if (graphs.empty()) throw std::invalid_argument("family file is empty: " + file);
        return GraphFamily(graphs);
    }
    if (!expr.empty()) return GraphFamily({graph_from_expr(expr)});
    throw std::invalid_argument("a family is required (--family FILE or --expr EXPR)");
}

void emit_family(const GraphFamily& f, const std::string& format) {
    if (format == "json") {
        std::cout << family_to_json(f).dump(2) << "\n";
    } else {
        for (const auto& g : f.sorted_members()) std::cout << to_graph6(g) << "\n";
    }
}

void write_or_print(const json& doc, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream out(out_file);
        if (!out) throw std::invalid_argument("cannot open output file: " + out_file);
        out << doc.dump(2) << "\n";
    }
}

ColoringOfKn build_construction(const std::string& theorem, int n, int p, int k, int q) {
    if (theorem == "1.4") return construct_kp_extremal(n, p);
    if (theorem == "1.8ii" || theorem == "cliques") return construct_thm18_ii(n, p, k);
    if (theorem == "1.8i" || theorem == "petersen") {
        int pp = theorem == "petersen" ? 2 : p;
        int kk = theorem == "petersen" ? 3 : k;
        int qq = theorem == "petersen" ? 2 : q;
        int slots = thm18_i_slot_count(pp, kk);
        if (qq < 1 || qq > slots)
            throw std::invalid_argument("construct: q must be between 1 and " +
                                        std::to_string(slots));
        std::vector<int> labels(slots);
        for (int i = 0; i < slots; ++i) labels[i] = std::min(i, qq - 1);
        return construct_thm18_i(n, pp, kk, labels);
    }
    if (theorem == "1.12") return construct_cprime(n, k - 1, p);
    if (theorem == "1.12x") return construct_exceptional_k3(n);
    throw std::invalid_argument("construct: unknown theorem id '" + theorem + "'");
}

long long formula_value(const std::string& theorem, int n, int p, int k, int q) {
    if (theorem == "1.4") return ar_formula_kp(n, p);
    if (theorem == "1.8i") return ar_thm18_i(n, p, k, q);
    if (theorem == "1.8ii") return ar_thm18_ii(n, p, k);
    if (theorem == "cliques") return ar_disjoint_cliques(n, p, k);
    if (theorem == "petersen") return ar_petersen(n);
    if (theorem == "1.12" || theorem == "1.12x") return ar_thm112(n, p, k);
    throw std::invalid_argument("formula: unknown theorem id '" + theorem + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact decomposition-family and anti-Ramsey computations"};
    app.require_subcommand(1);

    std::string family_file, family_expr, emit = "g6", out_file, coloring_file, theorem;
    int n = 0, p = 2, k = 2, q = 1;
    std::optional<int> stages;
    bool reeval = false, frozen = false;
    uint64_t budget = UINT64_MAX;

    auto add_family_opts = [&](CLI::App* cmd) {
        cmd->add_option("--family", family_file, "family file, one graph6 per line");
        cmd->add_option("--expr", family_expr, "graph expression for a one-member family");
    };

    auto* decompose = app.add_subcommand("decompose", "decomposition family of a graph family");
    add_family_opts(decompose);
    decompose->add_option("--emit", emit, "output format: g6 or json")
        ->check(CLI::IsMember({"g6", "json"}));

    auto* sequence = app.add_subcommand("sequence", "decomposition family sequence report");
    add_family_opts(sequence);
    sequence->add_option("--stages", stages, "number of decomposition stages to record");
    sequence->add_flag("--reeval-p", reeval,
                       "re-evaluate p per stage (the default; kept for explicitness)");
    sequence->add_flag("--frozen-p", frozen, "pin p at p(F_0) for every stage");

    auto* arexact = app.add_subcommand("ar-exact", "exact anti-Ramsey number by search");
    arexact->add_option("-n", n, "order of the complete graph")->required();
    add_family_opts(arexact);
    arexact->add_option("--budget", budget, "search-node budget");

    auto* formula = app.add_subcommand("formula", "closed-form anti-Ramsey value");
    formula->add_option("--theorem", theorem, "1.4|1.8i|1.8ii|cliques|petersen|1.12")->required();
    formula->add_option("-n", n, "order of the complete graph")->required();
    formula->add_option("-p", p, "number of Turan classes");
    formula->add_option("-k", k, "clique/fan multiplicity parameter");
    formula->add_option("-q", q, "extra-color count (1.8i only)");

    auto* construct = app.add_subcommand("construct", "build an extremal coloring");
    construct->add_option("--theorem", theorem, "1.4|1.8i|1.8ii|cliques|petersen|1.12|1.12x")
        ->required();
    construct->add_option("-n", n, "order of the complete graph")->required();
    construct->add_option("-p", p, "number of Turan classes");
    construct->add_option("-k", k, "clique/fan multiplicity parameter");
    construct->add_option("-q", q, "extra-color count (1.8i/petersen)");
    construct->add_option("--out", out_file, "write the coloring JSON here");

    auto* verify = app.add_subcommand("verify", "check a coloring for F-freeness");
    verify->add_option("--coloring", coloring_file, "coloring JSON file")->required();
    add_family_opts(verify);

    auto* qmax = app.add_subcommand("qmax", "maximum F-free extra-color count");
    qmax->add_option("-n", n, "order of the complete graph")->required();
    qmax->add_option("-p", p, "number of Turan classes");
    qmax->add_option("-k", k, "clique/fan multiplicity parameter");
    add_family_opts(qmax);

    auto* vt = app.add_subcommand("verify-theorem", "run all clauses of a theorem check");
    vt->add_option("--theorem", theorem, "1.4|1.8i|1.8ii|cliques|petersen|1.12i|1.12ii")
        ->required();
    vt->add_option("-n", n, "order of the complete graph")->required();
    vt->add_option("-p", p, "number of Turan classes");
    vt->add_option("-k", k, "clique/fan multiplicity parameter");
    vt->add_option("-q", q, "extra-color count");
    add_family_opts(vt);

    auto* k5 = app.add_subcommand("k5-check", "K5 decomposition-sequence determination replay");
    (void)k5;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (decompose->parsed()) {
            emit_family(decomposition_family(load_family(family_file, family_expr)), emit);
            return kExitOk;
        }
        if (sequence->parsed()) {
            if (reeval && frozen)
                throw std::invalid_argument("sequence: --reeval-p and --frozen-p conflict");
            auto f = load_family(family_file, family_expr);
            auto seq = decomposition_sequence(f, stages, frozen);
            std::cout << sequence_to_json(seq).dump(2) << "\n";
            return kExitOk;
        }
        if (arexact->parsed()) {
            auto f = load_family(family_file, family_expr);
            ArOptions opt;
            opt.node_budget = budget;
            opt.on_improved = [](int best, uint64_t nodes) {
                std::cerr << "best-so-far " << best << " colors after " << nodes << " nodes\n";
            };
            auto r = ar_exact(n, f, opt);
            std::cout << ar_result_to_json(r).dump(2) << "\n";
            return kExitOk;
        }
        if (formula->parsed()) {
            std::cout << formula_value(theorem, n, p, k, q) << "\n";
            return kExitOk;
        }
        if (construct->parsed()) {
            auto c = build_construction(theorem, n, p, k, q);
            write_or_print(coloring_to_json(c), out_file);
            std::cerr << "colors: " << num_colors(c) << "\n";
            return kExitOk;
        }
        if (verify->parsed()) {
            std::ifstream in(coloring_file);
            if (!in) throw std::invalid_argument("cannot open coloring file: " + coloring_file);
            json doc = json::parse(in);
            auto c = coloring_from_json(doc);
            auto f = load_family(family_file, family_expr);
            bool free = is_family_free(c, f);
            json out{{"n", c.n()},
                     {"colors", num_colors(c)},
                     {"family_size", f.size()},
                     {"family_free", free}};
            std::cout << out.dump(2) << "\n";
            return free ? kExitOk : kExitCheckFailed;
        }
        if (qmax->parsed()) {
            auto f = load_family(family_file, family_expr);
            auto r = max_extra_colors(n, p, k, f);
            std::cout << qmax_to_json(r, n, p).dump(2) << "\n";
            return kExitOk;
        }
        if (vt->parsed()) {
            auto f = load_family(family_file, family_expr);
            TheoremParams prm{n, p, k, q};
            auto rep = verify_theorem(theorem, prm, f);
            std::cout << theorem_report_to_json(rep).dump(2) << "\n";
            for (const auto& c : rep.clauses)
                std::cerr << (c.pass ? "PASS " : "FAIL ") << c.id << " (expected " << c.expected
                          << ", got " << c.actual << ")\n";
            return rep.pass ? kExitOk : kExitCheckFailed;
        }
        if (k5->parsed()) {
            auto rep = k5_determination_check();
            std::cout << k5_report_to_json(rep).dump(2) << "\n";
            for (const auto& st : rep.forward)
                std::cerr << (st.pass ? "PASS " : "FAIL ") << "forward " << st.label << "\n";
            for (const auto& st : rep.reconstruction)
                std::cerr << (st.pass ? "PASS " : "FAIL ") << "reconstruction " << st.label << "\n";
            std::cerr << (rep.pass ? "PASS" : "FAIL") << "\n";
            return rep.pass ? kExitOk : kExitCheckFailed;
        }
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const parse_error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
