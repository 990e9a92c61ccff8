#pragma once

#include "wsa/element.hpp"
#include "wsa/errors.hpp"
#include "wsa/scalar.hpp"
#include "wsa/semigroup.hpp"

#include <map>
#include <memory>
#include <string>

namespace wsa {

/// AST for the weight mini-language:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := NUMBER | 'n' | 'num' | 'den' | '(' expr ')'
///           | 'exp' '(' expr ')' | 'pow' '(' expr ',' expr ')'
struct ExprNode {
    enum class Kind { literal, var_n, var_num, var_den, add, sub, mul, div, exp_fn, pow_fn };

    Kind kind;
    Rational literal;
    std::unique_ptr<ExprNode> lhs;
    std::unique_ptr<ExprNode> rhs;
};

struct WeightExpr {
    std::shared_ptr<const ExprNode> root;
    std::string source;
    // applied before the expression: an element listed here takes its literal value
    std::map<Element, Rational, ElementLess> overrides;
};

/// Parses the grammar above; 'n' is rejected for fraction-element semigroups.
WeightExpr parse_weight_expr(const std::string& src, ElementKind kind);

namespace detail {

template <ScalarMode S>
S eval_node(const ExprNode& node, const Element& e) {
    using Kind = ExprNode::Kind;
    switch (node.kind) {
    case Kind::literal:
        return scalar_from_rational<S>(node.literal);
    case Kind::var_n:
    case Kind::var_num:
        return S::from_ratio(node.kind == Kind::var_n ? e.num() : e.num(), 1);
    case Kind::var_den:
        return S::from_ratio(e.den(), 1);
    case Kind::add:
        return eval_node<S>(*node.lhs, e) + eval_node<S>(*node.rhs, e);
    case Kind::sub:
        return eval_node<S>(*node.lhs, e) - eval_node<S>(*node.rhs, e);
    case Kind::mul:
        return eval_node<S>(*node.lhs, e) * eval_node<S>(*node.rhs, e);
    case Kind::div: {
        S d = eval_node<S>(*node.rhs, e);
        if (d.is_zero()) throw DomainError("division by zero in weight expression");
        return eval_node<S>(*node.lhs, e) / d;
    }
    case Kind::exp_fn: {
        S arg = eval_node<S>(*node.lhs, e);
        if constexpr (S::is_exact) {
            if (arg.is_zero()) return S::one();
            throw ModeError("exp() with a nonzero argument is irrational; rerun in log mode");
        } else {
            double x = arg.to_double();
            if (!std::isfinite(x)) throw DomainError("exp() argument too large for the log domain");
            return S::from_log(x);
        }
    }
    case Kind::pow_fn: {
        S base = eval_node<S>(*node.lhs, e);
        S expo = eval_node<S>(*node.rhs, e);
        if constexpr (S::is_exact) {
            if (!expo.is_integer())
                throw ModeError("pow() with a fractional exponent is irrational; rerun in log mode");
            int128 n = expo.num();
            if (n > INT64_MAX || n < -int128(INT64_MAX))
                throw OverflowError("pow() exponent out of range");
            return base.pow_int(static_cast<long long>(n));
        } else {
            double x = expo.to_double();
            if (!std::isfinite(x)) throw DomainError("pow() exponent too large");
            if (base.sign() > 0) return S::from_log(base.log_magnitude() * x);
            if (base.is_zero()) {
                if (x <= 0) throw DomainError("zero to a non-positive power");
                return S::zero();
            }
            double rounded = std::nearbyint(x);
            if (rounded != x) throw DomainError("negative base needs an integer exponent");
            return base.pow_int(static_cast<long long>(rounded));
        }
    }
    }
    throw DomainError("corrupt weight expression");
}

} // namespace detail

/// Evaluates the expression (overrides first); the result must be positive.
template <ScalarMode S>
S eval_weight_expr(const WeightExpr& expr, const Element& e) {
    S value = S::zero();
    if (auto it = expr.overrides.find(e); it != expr.overrides.end()) {
        value = scalar_from_rational<S>(it->second);
    } else {
        value = detail::eval_node<S>(*expr.root, e);
    }
    if (value.sign() <= 0)
        throw DomainError("weight expression '" + expr.source + "' is not positive at element " + e.str());
    return value;
}

} // namespace wsa
