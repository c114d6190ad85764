#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "antiramsey/graph.hpp"

namespace antiramsey {

/// Syntax error with a 0-based input position and what was expected there.
class parse_error : public std::invalid_argument {
public:
    parse_error(size_t pos, const std::string& expected, const std::string& got)
        : std::invalid_argument("parse error at position " + std::to_string(pos) + ": expected " +
                                expected + ", got " + got),
          position(pos) {}
    size_t position;
};

/// AST over the graph-expression grammar (precedence low to high):
///   expr   := term ("+" term)*          disjoint union
///   term   := factor ("v" factor)*      join
///   factor := INT "*" factor | atom     copies
///   atom   := K INT | C INT | P INT | S INT | M INT | T(INT,INT) | Q(INT,INT)
///           | fan(INT [, INT]) | petersen | "(" expr ")"
struct GraphExpr {
    enum class Kind { disjoint_union, graph_join, copy, k, c, p, s, m, t, q, fan, petersen };

    GraphExpr() = default;
    explicit GraphExpr(Kind kind_) : kind(kind_) {}

    Kind kind{};
    long long a = 0, b = 0;  // numeric arguments
    bool has_b = false;
    std::vector<GraphExpr> children;

    bool operator==(const GraphExpr& o) const {
        return kind == o.kind && a == o.a && b == o.b && has_b == o.has_b &&
               children == o.children;
    }
};

namespace detail {

constexpr long long kMaxCount = 1'000'000;

struct Lexer {
    std::string text;
    size_t pos = 0;

    struct Token {
        enum class Type { number, name, punct, end } type;
        std::string text;
        long long value = 0;
        size_t pos = 0;
    };

    Token next() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        Token t;
        t.pos = pos;
        if (pos == text.size()) {
            t.type = Token::Type::end;
            t.text = "<end of input>";
            return t;
        }
        char ch = text[pos];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            t.type = Token::Type::number;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                t.value = t.value * 10 + (text[pos] - '0');
                t.text += text[pos++];
                if (t.value > kMaxCount)
                    throw parse_error(t.pos, "count <= 1000000", "overflowing integer");
            }
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            // keywords first, otherwise single letters, so that expressions
            // like "K1vT(6,2)" lex without whitespace
            t.type = Token::Type::name;
            for (const char* kw : {"petersen", "fan"}) {
                size_t len = std::string(kw).size();
                if (text.compare(pos, len, kw) == 0 &&
                    !(pos + len < text.size() &&
                      std::isalpha(static_cast<unsigned char>(text[pos + len])))) {
                    t.text = kw;
                    pos += len;
                    return t;
                }
            }
            t.text = std::string(1, ch);
            ++pos;
            return t;
        }
        t.type = Token::Type::punct;
        t.text = std::string(1, ch);
        ++pos;
        return t;
    }
};

struct Parser {
    Lexer lex;
    Lexer::Token tok;

    explicit Parser(const std::string& s) : lex{s} { tok = lex.next(); }

    void advance() { tok = lex.next(); }

    void expect_punct(const std::string& p) {
        if (tok.type != Lexer::Token::Type::punct || tok.text != p)
            throw parse_error(tok.pos, "'" + p + "'", tok.text);
        advance();
    }

    long long expect_number() {
        if (tok.type != Lexer::Token::Type::number)
            throw parse_error(tok.pos, "an integer", tok.text);
        long long v = tok.value;
        advance();
        return v;
    }

    GraphExpr parse() {
        auto e = parse_expr();
        if (tok.type != Lexer::Token::Type::end)
            throw parse_error(tok.pos, "end of input, '+', or 'v'", tok.text);
        return e;
    }

    GraphExpr parse_expr() {
        GraphExpr first = parse_term();
        if (!(tok.type == Lexer::Token::Type::punct && tok.text == "+")) return first;
        GraphExpr out{GraphExpr::Kind::disjoint_union};
        out.children.push_back(std::move(first));
        while (tok.type == Lexer::Token::Type::punct && tok.text == "+") {
            advance();
            out.children.push_back(parse_term());
        }
        return out;
    }

    GraphExpr parse_term() {
        GraphExpr first = parse_factor();
        if (!(tok.type == Lexer::Token::Type::name && tok.text == "v")) return first;
        GraphExpr out{GraphExpr::Kind::graph_join};
        out.children.push_back(std::move(first));
        while (tok.type == Lexer::Token::Type::name && tok.text == "v") {
            advance();
            out.children.push_back(parse_factor());
        }
        return out;
    }

    GraphExpr parse_factor() {
        if (tok.type == Lexer::Token::Type::number) {
            GraphExpr out{GraphExpr::Kind::copy};
            out.a = tok.value;
            advance();
            expect_punct("*");
            out.children.push_back(parse_factor());
            return out;
        }
        return parse_atom();
    }

    GraphExpr parse_atom() {
        if (tok.type == Lexer::Token::Type::punct && tok.text == "(") {
            advance();
            GraphExpr e = parse_expr();
            expect_punct(")");
            return e;
        }
        if (tok.type != Lexer::Token::Type::name)
            throw parse_error(tok.pos, "an atom (K/C/P/S/M/T/Q/fan/petersen) or '('", tok.text);
        std::string name = tok.text;
        size_t name_pos = tok.pos;
        advance();
        if (name == "petersen") return GraphExpr{GraphExpr::Kind::petersen};
        if (name == "K" || name == "C" || name == "P" || name == "S" || name == "M") {
            GraphExpr out;
            out.kind = name == "K"   ? GraphExpr::Kind::k
                       : name == "C" ? GraphExpr::Kind::c
                       : name == "P" ? GraphExpr::Kind::p
                       : name == "S" ? GraphExpr::Kind::s
                                     : GraphExpr::Kind::m;
            if (tok.type != Lexer::Token::Type::number)
                throw parse_error(tok.pos, "a count after '" + name + "'", tok.text);
            out.a = expect_number();
            return out;
        }
        if (name == "T" || name == "Q") {
            GraphExpr out{name == "T" ? GraphExpr::Kind::t : GraphExpr::Kind::q};
            expect_punct("(");
            out.a = expect_number();
            expect_punct(",");
            out.b = expect_number();
            out.has_b = true;
            expect_punct(")");
            return out;
        }
        if (name == "fan") {
            GraphExpr out{GraphExpr::Kind::fan};
            expect_punct("(");
            out.a = expect_number();
            if (tok.type == Lexer::Token::Type::punct && tok.text == ",") {
                advance();
                out.b = expect_number();
                out.has_b = true;
            }
            expect_punct(")");
            return out;
        }
        throw parse_error(name_pos, "an atom (K/C/P/S/M/T/Q/fan/petersen)", name);
    }
};

inline int checked_int(long long v, const char* who) {
    if (v < 0 || v > kMaxCount)
        throw std::invalid_argument(std::string(who) + ": count out of range");
    return static_cast<int>(v);
}

}  // namespace detail

inline GraphExpr parse_graph_expr(const std::string& text) {
    detail::Parser parser(text);
    return parser.parse();
}

inline std::string print_graph_expr(const GraphExpr& e) {
    using K = GraphExpr::Kind;
    auto wrap = [](const GraphExpr& child, int min_level, const auto& self) -> std::string {
        int level = child.kind == K::disjoint_union ? 0
                    : child.kind == K::graph_join   ? 1
                    : child.kind == K::copy         ? 2
                                                    : 3;
        std::string s = self(child, self);
        return level < min_level ? "(" + s + ")" : s;
    };
    auto rec = [&](const GraphExpr& x, const auto& self) -> std::string {
        switch (x.kind) {
            case K::disjoint_union: {
                std::string s;
                for (size_t i = 0; i < x.children.size(); ++i)
                    s += (i ? " + " : "") + wrap(x.children[i], 1, self);
                return s;
            }
            case K::graph_join: {
                std::string s;
                for (size_t i = 0; i < x.children.size(); ++i)
                    s += (i ? " v " : "") + wrap(x.children[i], 2, self);
                return s;
            }
            case K::copy:
                return std::to_string(x.a) + "*" + wrap(x.children[0], 2, self);
            case K::k:
                return "K" + std::to_string(x.a);
            case K::c:
                return "C" + std::to_string(x.a);
            case K::p:
                return "P" + std::to_string(x.a);
            case K::s:
                return "S" + std::to_string(x.a);
            case K::m:
                return "M" + std::to_string(x.a);
            case K::t:
                return "T(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
            case K::q:
                return "Q(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
            case K::fan:
                return "fan(" + std::to_string(x.a) +
                       (x.has_b ? "," + std::to_string(x.b) : "") + ")";
            case K::petersen:
                return "petersen";
        }
        return "";
    };
    return rec(e, rec);
}

inline Graph eval_graph_expr(const GraphExpr& e) {
    using K = GraphExpr::Kind;
    using detail::checked_int;
    switch (e.kind) {
        case K::disjoint_union: {
            Graph g = eval_graph_expr(e.children[0]);
            for (size_t i = 1; i < e.children.size(); ++i)
                g = disjoint_union(g, eval_graph_expr(e.children[i]));
            return g;
        }
        case K::graph_join: {
            Graph g = eval_graph_expr(e.children[0]);
            for (size_t i = 1; i < e.children.size(); ++i)
                g = join(g, eval_graph_expr(e.children[i]));
            return g;
        }
        case K::copy:
            return copies(checked_int(e.a, "copies"), eval_graph_expr(e.children[0]));
        case K::k:
            return complete(checked_int(e.a, "K"));
        case K::c:
            return cycle(checked_int(e.a, "C"));
        case K::p:
            return path(checked_int(e.a, "P"));
        case K::s:
            return star(checked_int(e.a, "S"));
        case K::m:
            return matching(checked_int(e.a, "M"));
        case K::t:
            return turan(checked_int(e.a, "T"), checked_int(e.b, "T"));
        case K::q:
            return q_graph(checked_int(e.a, "Q"), checked_int(e.b, "Q"));
        case K::fan:
            return e.has_b ? general_fan(checked_int(e.a, "fan"), checked_int(e.b, "fan"))
                           : fan(checked_int(e.a, "fan"));
        case K::petersen:
            return petersen();
    }
    throw std::logic_error("eval_graph_expr: unreachable");
}

inline Graph graph_from_expr(const std::string& text) {
    return eval_graph_expr(parse_graph_expr(text));
}

}  // namespace antiramsey
