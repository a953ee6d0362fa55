#include "schwlab/expression.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace schwlab {
namespace {

enum class TokKind { number, imag_number, ident, op, end };

struct Token {
    TokKind kind;
    std::string text;
    double value = 0.0;  // for numbers
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) {
            ++i_;
        }
        current_.pos = i_;
        if (i_ >= text_.size()) {
            current_ = Token{TokKind::end, "", 0.0, i_};
            return;
        }
        const char c = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && i_ + 1 < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[i_ + 1])))) {
            const char* begin = text_.c_str() + i_;
            char* end = nullptr;
            const double v = std::strtod(begin, &end);
            std::size_t len = static_cast<std::size_t>(end - begin);
            bool imag = false;
            if (i_ + len < text_.size() && text_[i_ + len] == 'i') {
                imag = true;
                ++len;
            }
            current_ = Token{imag ? TokKind::imag_number : TokKind::number,
                             text_.substr(i_, len), v, i_};
            i_ += len;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])) ||
                                        text_[j] == '_')) {
                ++j;
            }
            if (j < text_.size() && text_[j] == '\'') ++j;  // g'
            current_ = Token{TokKind::ident, text_.substr(i_, j - i_), 0.0, i_};
            i_ = j;
            return;
        }
        if (std::string("+-*/(),;=").find(c) != std::string::npos) {
            current_ = Token{TokKind::op, std::string(1, c), 0.0, i_};
            ++i_;
            return;
        }
        throw ParseError(i_, std::string("unexpected character '") + c + "'");
    }

    const std::string& text_;
    std::size_t i_ = 0;
    Token current_;
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    enum class Kind { constant, variable, add, sub, mul, div, neg, call } kind;
    Complex value{};                // constant
    std::string name;               // call
    std::vector<NodePtr> children;  // operands / call arguments
    std::size_t pos = 0;
};

NodePtr make_node(Node n) { return std::make_shared<const Node>(std::move(n)); }

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    NodePtr parse_expression() {
        NodePtr lhs = parse_term();
        while (is_op("+") || is_op("-")) {
            const Token op = lex_.take();
            NodePtr rhs = parse_term();
            Node n;
            n.kind = op.text == "+" ? Node::Kind::add : Node::Kind::sub;
            n.children = {lhs, rhs};
            n.pos = op.pos;
            lhs = make_node(std::move(n));
        }
        return lhs;
    }

    bool is_op(const std::string& s) const {
        return lex_.peek().kind == TokKind::op && lex_.peek().text == s;
    }

    bool is_ident() const { return lex_.peek().kind == TokKind::ident; }

    Token expect_op(const std::string& s) {
        if (!is_op(s)) {
            throw ParseError(lex_.peek().pos, "expected '" + s + "'");
        }
        return lex_.take();
    }

    Token take() { return lex_.take(); }
    const Token& peek() const { return lex_.peek(); }

private:
    NodePtr parse_term() {
        NodePtr lhs = parse_factor();
        while (is_op("*") || is_op("/")) {
            const Token op = lex_.take();
            NodePtr rhs = parse_factor();
            Node n;
            n.kind = op.text == "*" ? Node::Kind::mul : Node::Kind::div;
            n.children = {lhs, rhs};
            n.pos = op.pos;
            lhs = make_node(std::move(n));
        }
        return lhs;
    }

    NodePtr parse_factor() {
        if (is_op("-")) {
            const Token op = lex_.take();
            Node n;
            n.kind = Node::Kind::neg;
            n.children = {parse_factor()};
            n.pos = op.pos;
            return make_node(std::move(n));
        }
        if (is_op("+")) {
            lex_.take();
            return parse_factor();
        }
        return parse_primary();
    }

    NodePtr parse_primary() {
        const Token t = lex_.peek();
        if (t.kind == TokKind::number || t.kind == TokKind::imag_number) {
            lex_.take();
            Node n;
            n.kind = Node::Kind::constant;
            n.value = t.kind == TokKind::number ? Complex(t.value, 0.0)
                                                : Complex(0.0, t.value);
            n.pos = t.pos;
            return make_node(std::move(n));
        }
        if (t.kind == TokKind::op && t.text == "(") {
            lex_.take();
            NodePtr inner = parse_expression();
            expect_op(")");
            return inner;
        }
        if (t.kind == TokKind::ident) {
            lex_.take();
            if (t.text == "z") {
                Node n;
                n.kind = Node::Kind::variable;
                n.pos = t.pos;
                return make_node(std::move(n));
            }
            if (t.text == "i") {
                Node n;
                n.kind = Node::Kind::constant;
                n.value = Complex(0.0, 1.0);
                n.pos = t.pos;
                return make_node(std::move(n));
            }
            Node n;
            n.kind = Node::Kind::call;
            n.name = t.text;
            n.pos = t.pos;
            expect_op("(");
            if (!is_op(")")) {
                n.children.push_back(parse_expression());
                while (is_op(",")) {
                    lex_.take();
                    n.children.push_back(parse_expression());
                }
            }
            expect_op(")");
            return make_node(std::move(n));
        }
        throw ParseError(t.pos, "expected a value, 'z', or a function call");
    }

    Lexer lex_;
};

bool contains_variable(const NodePtr& node) {
    if (node->kind == Node::Kind::variable) return true;
    for (const auto& c : node->children) {
        if (contains_variable(c)) return true;
    }
    return false;
}

Complex eval_constant(const NodePtr& node) {
    switch (node->kind) {
        case Node::Kind::constant: return node->value;
        case Node::Kind::variable:
            throw ParseError(node->pos, "expected a constant, found 'z'");
        case Node::Kind::add:
            return eval_constant(node->children[0]) + eval_constant(node->children[1]);
        case Node::Kind::sub:
            return eval_constant(node->children[0]) - eval_constant(node->children[1]);
        case Node::Kind::mul:
            return eval_constant(node->children[0]) * eval_constant(node->children[1]);
        case Node::Kind::div:
            return eval_constant(node->children[0]) / eval_constant(node->children[1]);
        case Node::Kind::neg: return -eval_constant(node->children[0]);
        case Node::Kind::call:
            throw ParseError(node->pos, "function calls are not allowed in constants");
    }
    throw ParseError(node->pos, "malformed constant expression");
}

double eval_real_constant(const NodePtr& node) {
    const Complex c = eval_constant(node);
    if (c.imag() != 0.0) {
        throw ParseError(node->pos, "expected a real constant");
    }
    return c.real();
}

void expect_arity(const Node& call, std::size_t n) {
    if (call.children.size() != n) {
        throw ParseError(call.pos, call.name + " expects " + std::to_string(n) +
                                       " argument(s), got " +
                                       std::to_string(call.children.size()));
    }
}

AnalyticMap build_map(const NodePtr& node) {
    switch (node->kind) {
        case Node::Kind::constant: return AnalyticMap::constant(node->value);
        case Node::Kind::variable: return AnalyticMap::identity();
        case Node::Kind::add: return build_map(node->children[0]) + build_map(node->children[1]);
        case Node::Kind::sub: return build_map(node->children[0]) - build_map(node->children[1]);
        case Node::Kind::mul: return build_map(node->children[0]) * build_map(node->children[1]);
        case Node::Kind::div: return build_map(node->children[0]) / build_map(node->children[1]);
        case Node::Kind::neg: return -build_map(node->children[0]);
        case Node::Kind::call: break;
    }
    const Node& call = *node;
    if (call.name == "mobius") {
        expect_arity(call, 4);
        return make_mobius(MobiusParams{
            eval_constant(call.children[0]), eval_constant(call.children[1]),
            eval_constant(call.children[2]), eval_constant(call.children[3])});
    }
    if (call.name == "lens") {
        expect_arity(call, 1);
        return make_lens_map(eval_real_constant(call.children[0]));
    }
    if (call.name == "koebe") {
        expect_arity(call, 0);
        return AnalyticMap::koebe();
    }
    if (call.name == "exp") {
        expect_arity(call, 1);
        return map_exp(build_map(call.children[0]));
    }
    if (call.name == "log") {
        expect_arity(call, 1);
        return map_log(build_map(call.children[0]));
    }
    if (call.name == "pow") {
        expect_arity(call, 2);
        return map_pow(build_map(call.children[0]),
                       eval_real_constant(call.children[1]));
    }
    if (call.name == "compose") {
        expect_arity(call, 2);
        return compose(build_map(call.children[0]), build_map(call.children[1]));
    }
    if (call.name == "scale") {
        expect_arity(call, 2);
        return scale(eval_constant(call.children[0]), build_map(call.children[1]));
    }
    throw ParseError(call.pos, "unknown function '" + call.name + "'");
}

// Jet of omega * h' to order 2, packaged so that antiderivative() recovers a
// g with exact g', g'', g'''.
AnalyticMap derivative_product(const AnalyticMap& omega, const AnalyticMap& h) {
    return AnalyticMap(
        "(" + omega.descriptor() + "*d/dz " + h.descriptor() + ")",
        [omega, h](Complex z) {
            const Jet3 w = omega(z);
            const Jet3 hj = h(z);
            const Jet3 hp{hj.d1, hj.d2, hj.d3, 0.0};
            Jet3 p = jet_mul(w, hp);
            p.d3 = 0.0;  // would need omega''' and h''''
            return p;
        });
}

struct Directive {
    std::string name;
    std::vector<Complex> args;
    std::size_t pos;
};

}  // namespace

MapSpec parse_map_spec(const std::string& text) {
    Parser parser(text);

    std::optional<NodePtr> h_expr, g_expr, gprime_expr, omega_expr;
    std::vector<Directive> directives;

    bool first = true;
    while (parser.peek().kind != TokKind::end) {
        if (!first) {
            parser.expect_op(";");
            if (parser.peek().kind == TokKind::end) break;  // trailing ';'
        }
        first = false;

        if (!parser.is_ident()) {
            throw ParseError(parser.peek().pos, "expected a statement");
        }
        const Token head = parser.take();
        if (parser.is_op("=")) {
            parser.take();
            NodePtr expr = parser.parse_expression();
            auto assign = [&](std::optional<NodePtr>& slot) {
                if (slot) {
                    throw ParseError(head.pos, "'" + head.text + "' assigned twice");
                }
                slot = expr;
            };
            if (head.text == "h") {
                assign(h_expr);
            } else if (head.text == "g") {
                assign(g_expr);
            } else if (head.text == "g'") {
                assign(gprime_expr);
            } else if (head.text == "omega") {
                assign(omega_expr);
            } else {
                throw ParseError(head.pos, "unknown assignment target '" + head.text +
                                               "' (expected h, g, g' or omega)");
            }
        } else if (parser.is_op("(")) {
            parser.take();
            Directive d{head.text, {}, head.pos};
            if (!parser.is_op(")")) {
                d.args.push_back(eval_constant(parser.parse_expression()));
                while (parser.is_op(",")) {
                    parser.take();
                    d.args.push_back(eval_constant(parser.parse_expression()));
                }
            }
            parser.expect_op(")");
            directives.push_back(std::move(d));
        } else {
            throw ParseError(parser.peek().pos, "expected '=' or '(' after '" +
                                                    head.text + "'");
        }
    }

    if (!h_expr) {
        throw ParseError(0, "map spec must define h");
    }
    const int g_sources = (g_expr ? 1 : 0) + (gprime_expr ? 1 : 0) + (omega_expr ? 1 : 0);
    if (g_sources > 1) {
        throw ParseError(0, "define at most one of g, g', omega");
    }

    AnalyticMap h = build_map(*h_expr);
    bool g_from_derivative = false;
    AnalyticMap g = AnalyticMap::constant(0.0);
    if (g_expr) {
        g = build_map(*g_expr);
    } else if (gprime_expr) {
        g = antiderivative(build_map(*gprime_expr));
        g_from_derivative = true;
    } else if (omega_expr) {
        g = antiderivative(derivative_product(build_map(*omega_expr), h));
        g_from_derivative = true;
    }

    HarmonicMap f(std::move(h), std::move(g));
    for (const auto& d : directives) {
        auto expect_args = [&](std::size_t n) {
            if (d.args.size() != n) {
                throw ParseError(d.pos, d.name + " expects " + std::to_string(n) +
                                            " argument(s)");
            }
        };
        if (d.name == "koebe_transform") {
            expect_args(1);
            f = koebe_transform(f, d.args[0]);
        } else if (d.name == "affine") {
            expect_args(1);
            f = affine_transform(f, d.args[0]);
        } else if (d.name == "precompose_automorphism") {
            expect_args(2);
            if (d.args[1].imag() != 0.0) {
                throw ParseError(d.pos, "rotation angle must be real");
            }
            f = precompose(f, make_disk_automorphism(d.args[0], d.args[1].real()));
        } else {
            throw ParseError(d.pos, "unknown directive '" + d.name + "'");
        }
    }

    AnalyticMap omega = f.dilatation_map();
    return MapSpec{text, std::move(f), std::move(omega), g_from_derivative};
}

Complex parse_complex(const std::string& text) {
    Parser parser(text);
    NodePtr expr = parser.parse_expression();
    if (parser.peek().kind != TokKind::end) {
        throw ParseError(parser.peek().pos, "trailing input after complex constant");
    }
    if (contains_variable(expr)) {
        throw ParseError(0, "expected a constant, found 'z'");
    }
    return eval_constant(expr);
}

}  // namespace schwlab
