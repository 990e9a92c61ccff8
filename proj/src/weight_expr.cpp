#include "wsa/weight_expr.hpp"

#include <cctype>

namespace wsa {

namespace {

class Parser {
public:
    Parser(const std::string& src, ElementKind kind) : src_(src), kind_(kind) {}

    std::unique_ptr<ExprNode> run() {
        auto node = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return node;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    std::unique_ptr<ExprNode> expr() {
        auto node = term();
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-') return node;
            ++pos_;
            auto next = std::make_unique<ExprNode>();
            next->kind = c == '+' ? ExprNode::Kind::add : ExprNode::Kind::sub;
            next->lhs = std::move(node);
            next->rhs = term();
            node = std::move(next);
        }
    }

    std::unique_ptr<ExprNode> term() {
        auto node = factor();
        for (;;) {
            char c = peek();
            if (c != '*' && c != '/') return node;
            ++pos_;
            auto next = std::make_unique<ExprNode>();
            next->kind = c == '*' ? ExprNode::Kind::mul : ExprNode::Kind::div;
            next->lhs = std::move(node);
            next->rhs = factor();
            node = std::move(next);
        }
    }

    std::unique_ptr<ExprNode> factor() {
        char c = peek();
        if (c == '\0') fail("unexpected end of expression");
        if (c == '(') {
            ++pos_;
            auto node = expr();
            expect(')');
            return node;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        fail(std::string("unexpected character '") + c + "'");
    }

    std::unique_ptr<ExprNode> number() {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
            ++pos_;
        auto node = std::make_unique<ExprNode>();
        node->kind = ExprNode::Kind::literal;
        try {
            node->literal = Rational::parse(src_.substr(start, pos_ - start));
        } catch (const Error&) {
            pos_ = start;
            fail("malformed number");
        }
        return node;
    }

    std::unique_ptr<ExprNode> identifier() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        std::string name = src_.substr(start, pos_ - start);
        if (name == "exp" || name == "pow") {
            auto node = std::make_unique<ExprNode>();
            node->kind = name == "exp" ? ExprNode::Kind::exp_fn : ExprNode::Kind::pow_fn;
            expect('(');
            node->lhs = expr();
            if (node->kind == ExprNode::Kind::pow_fn) {
                expect(',');
                node->rhs = expr();
            }
            expect(')');
            return node;
        }
        auto node = std::make_unique<ExprNode>();
        if (name == "n") {
            if (kind_ == ElementKind::fraction) {
                pos_ = start;
                fail("variable 'n' is for integer elements; use 'num'/'den' here");
            }
            node->kind = ExprNode::Kind::var_n;
        } else if (name == "num") {
            node->kind = ExprNode::Kind::var_num;
        } else if (name == "den") {
            node->kind = ExprNode::Kind::var_den;
        } else {
            pos_ = start;
            fail("unknown identifier '" + name + "'");
        }
        return node;
    }

    const std::string& src_;
    ElementKind kind_;
    std::size_t pos_ = 0;
};

} // namespace

WeightExpr parse_weight_expr(const std::string& src, ElementKind kind) {
    if (src.empty()) throw ParseError("empty weight expression", 0);
    WeightExpr expr;
    expr.root = std::shared_ptr<const ExprNode>(Parser(src, kind).run().release());
    expr.source = src;
    return expr;
}

} // namespace wsa
