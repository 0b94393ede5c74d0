#include "qhx/expr.hpp"

#include <cctype>

namespace qhx::expr {

struct Expression::Node {
    enum class Kind { Constant, Variable, ConjVariable, Add, Sub, Mul, Neg };
    Kind kind;
    Quat constant{};
    std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_constant(const Quat& v) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Constant;
    n->constant = v;
    return n;
}

NodePtr make_leaf(Node::Kind kind) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    return n;
}

NodePtr make_binary(Node::Kind kind, NodePtr lhs, NodePtr rhs) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

NodePtr make_neg(NodePtr operand) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Neg;
    n->lhs = std::move(operand);
    return n;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr run() {
        NodePtr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        for (;;) {
            if (eat('+'))
                lhs = make_binary(Node::Kind::Add, lhs, parse_term());
            else if (eat('-'))
                lhs = make_binary(Node::Kind::Sub, lhs, parse_term());
            else
                return lhs;
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_factor();
        while (eat('*')) lhs = make_binary(Node::Kind::Mul, lhs, parse_factor());
        return lhs;
    }

    NodePtr parse_factor() {
        if (eat('-')) return make_neg(parse_factor());
        return parse_primary();
    }

    NodePtr parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_word();
        if (c == '(') {
            ++pos_;
            NodePtr inner = parse_expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    NodePtr parse_number() {
        long long num = parse_integer();
        long long den = 1;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            size_t slash = pos_;
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("expected denominator digits", pos_);
            den = parse_integer();
            if (den == 0) throw ParseError("zero denominator", slash);
        }
        double v = static_cast<double>(num) / static_cast<double>(den);
        return make_constant(Quat{v, 0.0, 0.0, 0.0});
    }

    long long parse_integer() {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::stoll(std::string(text_.substr(start, pos_ - start)));
    }

    NodePtr parse_word() {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string_view w = text_.substr(start, pos_ - start);
        if (w == "q") return make_leaf(Node::Kind::Variable);
        if (w == "qbar") return make_leaf(Node::Kind::ConjVariable);
        if (w == "i") return make_constant(Quat::i());
        if (w == "j") return make_constant(Quat::j());
        if (w == "k") return make_constant(Quat::k());
        throw ParseError("unknown symbol '" + std::string(w) + "'", start);
    }
};

Quat eval_node(const Node& n, const Quat& q) {
    switch (n.kind) {
        case Node::Kind::Constant: return n.constant;
        case Node::Kind::Variable: return q;
        case Node::Kind::ConjVariable: return conjugate(q);
        case Node::Kind::Add: return eval_node(*n.lhs, q) + eval_node(*n.rhs, q);
        case Node::Kind::Sub: return eval_node(*n.lhs, q) - eval_node(*n.rhs, q);
        case Node::Kind::Mul: return eval_node(*n.lhs, q) * eval_node(*n.rhs, q);
        case Node::Kind::Neg: return -eval_node(*n.lhs, q);
    }
    throw std::logic_error("unreachable");
}

} // namespace

Quat Expression::eval(const Quat& q) const { return eval_node(*root_, q); }

Expression parse(std::string_view text) {
    Expression e;
    e.root_ = Parser(text).run();
    e.source_ = std::string(text);
    return e;
}

} // namespace qhx::expr
