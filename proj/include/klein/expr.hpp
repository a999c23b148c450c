#pragma once

// Expression language over multivectors: literals, the eight basis symbols,
// unary functions, and the binary operators
//   +  -   (sum level)
//   *  ^  .  &  x   (product level: geometric, wedge, inner, join, commutator)
// Product operators share one precedence and must not be mixed without
// parentheses; a number directly followed by a basis symbol is a scalar
// multiple ("3 e1").

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "algebra.hpp"
#include "duality.hpp"
#include "error.hpp"
#include "format.hpp"
#include "multivector.hpp"
#include "spaces.hpp"

namespace klein {

enum class UnaryOp { Neg, Exp, Rev, Inv, Norm, Dual, Undual, Normalise };
enum class BinaryOp { Add, Sub, Mul, Outer, Inner, Join, Comm };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    struct Literal {
        double value;
    };
    struct Basis {
        std::size_t slot;
    };
    struct Unary {
        UnaryOp op;
        ExprPtr child;
    };
    struct GradePart {
        ExprPtr child;
        int grade;
    };
    struct Binary {
        BinaryOp op;
        ExprPtr lhs, rhs;
        bool juxtaposed = false; // "3 e1" rather than "3 * e1"
    };

    std::variant<Literal, Basis, Unary, GradePart, Binary> node;
};

inline ExprPtr make_literal(double v) { return std::make_shared<Expr>(Expr{Expr::Literal{v}}); }
inline ExprPtr make_basis(std::size_t s) { return std::make_shared<Expr>(Expr{Expr::Basis{s}}); }
inline ExprPtr make_unary(UnaryOp op, ExprPtr c) {
    return std::make_shared<Expr>(Expr{Expr::Unary{op, std::move(c)}});
}
inline ExprPtr make_grade(ExprPtr c, int k) {
    return std::make_shared<Expr>(Expr{Expr::GradePart{std::move(c), k}});
}
inline ExprPtr make_binary(BinaryOp op, ExprPtr l, ExprPtr r, bool juxt = false) {
    return std::make_shared<Expr>(Expr{Expr::Binary{op, std::move(l), std::move(r), juxt}});
}

inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a->node.index() != b->node.index()) return false;
    if (auto* la = std::get_if<Expr::Literal>(&a->node))
        return la->value == std::get<Expr::Literal>(b->node).value;
    if (auto* ba = std::get_if<Expr::Basis>(&a->node))
        return ba->slot == std::get<Expr::Basis>(b->node).slot;
    if (auto* ua = std::get_if<Expr::Unary>(&a->node)) {
        const auto& ub = std::get<Expr::Unary>(b->node);
        return ua->op == ub.op && expr_equal(ua->child, ub.child);
    }
    if (auto* ga = std::get_if<Expr::GradePart>(&a->node)) {
        const auto& gb = std::get<Expr::GradePart>(b->node);
        return ga->grade == gb.grade && expr_equal(ga->child, gb.child);
    }
    const auto& xa = std::get<Expr::Binary>(a->node);
    const auto& xb = std::get<Expr::Binary>(b->node);
    return xa.op == xb.op && expr_equal(xa.lhs, xb.lhs) && expr_equal(xa.rhs, xb.rhs);
}

namespace detail {

enum class TokenKind { Number, Ident, Op, LParen, RParen, Comma, End };

struct Token {
    TokenKind kind;
    std::size_t offset;
    double number = 0.0;
    std::string text; // ident name or operator spelling
};

inline std::vector<Token> lex(std::string_view src) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < src.size()) {
        char ch = src[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t end = i;
            while (end < src.size() && std::isdigit(static_cast<unsigned char>(src[end]))) ++end;
            if (end < src.size() && src[end] == '.') {
                ++end;
                while (end < src.size() && std::isdigit(static_cast<unsigned char>(src[end]))) ++end;
            }
            if (end < src.size() && (src[end] == 'e' || src[end] == 'E')) {
                std::size_t mark = end + 1;
                if (mark < src.size() && (src[mark] == '+' || src[mark] == '-')) ++mark;
                if (mark < src.size() && std::isdigit(static_cast<unsigned char>(src[mark]))) {
                    ++mark;
                    while (mark < src.size() && std::isdigit(static_cast<unsigned char>(src[mark])))
                        ++mark;
                    end = mark;
                }
            }
            tokens.push_back({TokenKind::Number, start,
                              std::stod(std::string(src.substr(start, end - start))), ""});
            i = end;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t end = i;
            while (end < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[end])) || src[end] == '_'))
                ++end;
            std::string name(src.substr(start, end - start));
            if (name == "x")
                tokens.push_back({TokenKind::Op, start, 0.0, "x"});
            else
                tokens.push_back({TokenKind::Ident, start, 0.0, std::move(name)});
            i = end;
            continue;
        }
        switch (ch) {
        case '+': case '-': case '*': case '^': case '.': case '&':
            tokens.push_back({TokenKind::Op, start, 0.0, std::string(1, ch)});
            break;
        case '(': tokens.push_back({TokenKind::LParen, start, 0.0, "("}); break;
        case ')': tokens.push_back({TokenKind::RParen, start, 0.0, ")"}); break;
        case ',': tokens.push_back({TokenKind::Comma, start, 0.0, ","}); break;
        default:
            throw SyntaxError(start, "a number, basis symbol, operator, or parenthesis");
        }
        ++i;
    }
    tokens.push_back({TokenKind::End, src.size(), 0.0, ""});
    return tokens;
}

inline int basis_slot_of(std::string_view name) {
    if (name == "I") return static_cast<int>(slot::e012);
    for (std::size_t i = 1; i < 8; ++i)
        if (name == basis_names[i]) return static_cast<int>(i);
    return -1;
}

inline bool is_unary_function(std::string_view name) {
    return name == "exp" || name == "rev" || name == "inv" || name == "norm" || name == "dual" ||
           name == "undual" || name == "normalise" || name == "grade";
}

struct Parser {
    std::vector<Token> tokens;
    std::size_t pos = 0;

    const Token& peek() const { return tokens[pos]; }
    const Token& advance() { return tokens[pos++]; }

    bool at_op(std::string_view spelling) const {
        return peek().kind == TokenKind::Op && peek().text == spelling;
    }

    ExprPtr parse_expression() {
        ExprPtr lhs = parse_term();
        while (at_op("+") || at_op("-")) {
            BinaryOp op = at_op("+") ? BinaryOp::Add : BinaryOp::Sub;
            advance();
            lhs = make_binary(op, lhs, parse_term());
        }
        return lhs;
    }

    static bool is_product(const Token& t) {
        return t.kind == TokenKind::Op &&
               (t.text == "*" || t.text == "^" || t.text == "." || t.text == "&" || t.text == "x");
    }

    static BinaryOp product_op(const std::string& spelling) {
        if (spelling == "*") return BinaryOp::Mul;
        if (spelling == "^") return BinaryOp::Outer;
        if (spelling == ".") return BinaryOp::Inner;
        if (spelling == "&") return BinaryOp::Join;
        return BinaryOp::Comm;
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_unary();
        std::string seen;
        while (is_product(peek())) {
            const Token& t = peek();
            if (seen.empty())
                seen = t.text;
            else if (seen != t.text)
                throw SyntaxError(t.offset,
                                  "'" + seen + "' (mixed product operators need parentheses)");
            advance();
            lhs = make_binary(product_op(seen), lhs, parse_unary());
        }
        return lhs;
    }

    ExprPtr parse_unary() {
        if (at_op("-")) {
            advance();
            return make_unary(UnaryOp::Neg, parse_unary());
        }
        return parse_primary();
    }

    void expect(TokenKind kind, const char* what) {
        if (peek().kind != kind) throw SyntaxError(peek().offset, what);
        advance();
    }

    ExprPtr parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
        case TokenKind::Number: {
            advance();
            ExprPtr lit = make_literal(t.number);
            if (peek().kind == TokenKind::Ident && basis_slot_of(peek().text) >= 0) {
                std::size_t s = static_cast<std::size_t>(basis_slot_of(advance().text));
                return make_binary(BinaryOp::Mul, lit, make_basis(s), /*juxt=*/true);
            }
            return lit;
        }
        case TokenKind::Ident: {
            int s = basis_slot_of(t.text);
            if (s >= 0) {
                advance();
                return make_basis(static_cast<std::size_t>(s));
            }
            if (is_unary_function(t.text)) {
                std::string name = advance().text;
                expect(TokenKind::LParen, "'(' after function name");
                ExprPtr arg = parse_expression();
                if (name == "grade") {
                    expect(TokenKind::Comma, "',' and a grade in 0..3");
                    const Token& g = peek();
                    if (g.kind != TokenKind::Number || g.number != static_cast<int>(g.number) ||
                        g.number < 0 || g.number > 3)
                        throw SyntaxError(g.offset, "an integer grade in 0..3");
                    advance();
                    expect(TokenKind::RParen, "')'");
                    return make_grade(arg, static_cast<int>(g.number));
                }
                expect(TokenKind::RParen, "')'");
                if (name == "exp") return make_unary(UnaryOp::Exp, arg);
                if (name == "rev") return make_unary(UnaryOp::Rev, arg);
                if (name == "inv") return make_unary(UnaryOp::Inv, arg);
                if (name == "norm") return make_unary(UnaryOp::Norm, arg);
                if (name == "dual") return make_unary(UnaryOp::Dual, arg);
                if (name == "undual") return make_unary(UnaryOp::Undual, arg);
                return make_unary(UnaryOp::Normalise, arg);
            }
            throw SyntaxError(t.offset, "a basis symbol or function name");
        }
        case TokenKind::LParen: {
            advance();
            ExprPtr inner = parse_expression();
            expect(TokenKind::RParen, "')'");
            return inner;
        }
        default:
            throw SyntaxError(t.offset, "a value");
        }
    }
};

} // namespace detail

/// Parses the expression grammar; throws SyntaxError with the byte offset of
/// the offending token.
inline ExprPtr parse(std::string_view src) {
    detail::Parser parser{detail::lex(src)};
    ExprPtr e = parser.parse_expression();
    if (parser.peek().kind != detail::TokenKind::End)
        throw SyntaxError(parser.peek().offset, "end of input or an operator");
    return e;
}

/// Canonical text of an AST; parse(print_expr(e)) reproduces e exactly.
inline std::string print_expr(const ExprPtr& e) {
    if (auto* lit = std::get_if<Expr::Literal>(&e->node)) return format_real(lit->value, 17);
    if (auto* basis = std::get_if<Expr::Basis>(&e->node))
        return detail::basis_names[basis->slot];
    if (auto* u = std::get_if<Expr::Unary>(&e->node)) {
        switch (u->op) {
        case UnaryOp::Neg: return "-" + print_expr(u->child);
        case UnaryOp::Exp: return "exp(" + print_expr(u->child) + ")";
        case UnaryOp::Rev: return "rev(" + print_expr(u->child) + ")";
        case UnaryOp::Inv: return "inv(" + print_expr(u->child) + ")";
        case UnaryOp::Norm: return "norm(" + print_expr(u->child) + ")";
        case UnaryOp::Dual: return "dual(" + print_expr(u->child) + ")";
        case UnaryOp::Undual: return "undual(" + print_expr(u->child) + ")";
        case UnaryOp::Normalise: return "normalise(" + print_expr(u->child) + ")";
        }
    }
    if (auto* g = std::get_if<Expr::GradePart>(&e->node))
        return "grade(" + print_expr(g->child) + ", " + std::to_string(g->grade) + ")";
    const auto& b = std::get<Expr::Binary>(e->node);
    if (b.juxtaposed)
        return print_expr(b.lhs) + " " + print_expr(b.rhs);
    const char* op = "";
    switch (b.op) {
    case BinaryOp::Add: op = " + "; break;
    case BinaryOp::Sub: op = " - "; break;
    case BinaryOp::Mul: op = " * "; break;
    case BinaryOp::Outer: op = " ^ "; break;
    case BinaryOp::Inner: op = " . "; break;
    case BinaryOp::Join: op = " & "; break;
    case BinaryOp::Comm: op = " x "; break;
    }
    return "(" + print_expr(b.lhs) + op + print_expr(b.rhs) + ")";
}

/// Either representation; products across representations are rejected.
using Value = std::variant<Multivector, DualMultivector>;

namespace detail {

[[noreturn]] inline void representation_error(const char* what) {
    throw Error(ErrorKind::RepresentationMismatch, what);
}

} // namespace detail

inline Value evaluate_value(const ExprPtr& e, const Space& space) {
    if (auto* lit = std::get_if<Expr::Literal>(&e->node)) return scalar_mv(lit->value);
    if (auto* basis = std::get_if<Expr::Basis>(&e->node)) return basis_blade(basis->slot);
    if (auto* u = std::get_if<Expr::Unary>(&e->node)) {
        Value v = evaluate_value(u->child, space);
        if (u->op == UnaryOp::Neg) {
            if (auto* m = std::get_if<Multivector>(&v)) return -*m;
            return -std::get<DualMultivector>(v);
        }
        if (u->op == UnaryOp::Undual) {
            if (auto* d = std::get_if<DualMultivector>(&v)) return undual(*d);
            detail::representation_error("undual expects a model-space value");
        }
        auto* m = std::get_if<Multivector>(&v);
        if (!m) detail::representation_error("function applies to line/point algebra values only");
        switch (u->op) {
        case UnaryOp::Exp: return exponential(*m, space.signature);
        case UnaryOp::Rev: return reverse(*m);
        case UnaryOp::Inv: return inverse(*m, space.signature);
        case UnaryOp::Norm: return scalar_mv(norm(*m, space.signature));
        case UnaryOp::Dual: return dual(*m);
        case UnaryOp::Normalise: return normalise(*m, space.signature);
        default: detail::representation_error("unexpected unary operator");
        }
    }
    if (auto* g = std::get_if<Expr::GradePart>(&e->node)) {
        Value v = evaluate_value(g->child, space);
        if (auto* m = std::get_if<Multivector>(&v)) return grade_select(*m, g->grade);
        DualMultivector d = std::get<DualMultivector>(v);
        DualMultivector r;
        for (std::size_t i = 0; i < 8; ++i)
            if (detail::slot_grade[i] == g->grade) r.c[i] = d.c[i];
        return r;
    }
    const auto& b = std::get<Expr::Binary>(e->node);
    Value lv = evaluate_value(b.lhs, space);
    Value rv = evaluate_value(b.rhs, space);
    auto* lm = std::get_if<Multivector>(&lv);
    auto* rm = std::get_if<Multivector>(&rv);
    if (lm && rm) {
        switch (b.op) {
        case BinaryOp::Add: return *lm + *rm;
        case BinaryOp::Sub: return *lm - *rm;
        case BinaryOp::Mul: return geometric_product(*lm, *rm, space.signature);
        case BinaryOp::Outer: return outer_product(*lm, *rm);
        case BinaryOp::Inner: return inner_product(*lm, *rm, space.signature);
        case BinaryOp::Join: return join(*lm, *rm);
        case BinaryOp::Comm: return commutator(*lm, *rm, space.signature);
        }
        detail::representation_error("unexpected binary operator");
    }
    auto* ld = std::get_if<DualMultivector>(&lv);
    auto* rd = std::get_if<DualMultivector>(&rv);
    if (ld && rd) {
        switch (b.op) {
        case BinaryOp::Add: return *ld + *rd;
        case BinaryOp::Sub: return *ld - *rd;
        case BinaryOp::Join: return outer_product_dual(*ld, *rd); // the model-space wedge
        default:
            detail::representation_error("model-space values combine with +, - and & only");
        }
    }
    detail::representation_error("operands live in different representations");
}

/// Evaluates to a Multivector; a model-space result is an error here.
inline Multivector evaluate(const ExprPtr& e, const Space& space) {
    Value v = evaluate_value(e, space);
    if (auto* m = std::get_if<Multivector>(&v)) return *m;
    detail::representation_error("expression yields a model-space value; use eval to print it");
}

inline std::string value_to_text(const Value& v, int precision) {
    if (auto* m = std::get_if<Multivector>(&v)) return to_text(*m, precision);
    return to_text(std::get<DualMultivector>(v), precision);
}

inline std::string value_to_json(const Value& v, int precision) {
    if (auto* m = std::get_if<Multivector>(&v)) return to_json(*m, precision);
    return to_json(std::get<DualMultivector>(v), precision);
}

/// One expression evaluated in one space, rendered as a JSON object; domain
/// errors become {"error": kind} entries. The CLI and the golden corpus both
/// go through here, so their bytes match by construction.
inline std::string eval_result_json(std::string_view src, const Space& space, int precision = 12) {
    std::string out = "{\"expr\": \"";
    for (char ch : src) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    out += "\", \"space\": \"";
    out += space_name(space);
    out += "\", ";
    try {
        Value v = evaluate_value(parse(src), space);
        out += "\"value\": " + value_to_json(v, precision);
    } catch (const Error& err) {
        out += "\"error\": \"";
        out += error_kind_name(err.kind());
        out += '"';
    }
    out += "}";
    return out;
}

} // namespace klein
