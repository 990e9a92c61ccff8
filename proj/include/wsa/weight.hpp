#pragma once

#include "wsa/element.hpp"
#include "wsa/errors.hpp"
#include "wsa/scalar.hpp"
#include "wsa/weight_expr.hpp"

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>

namespace wsa {

/// Positive function on elements, in the active numeric mode. Optionally
/// carries closed forms for the iterated weights and a tail certificate
/// bounding ratio suprema outside a window, which is what upgrades
/// window-relative answers to statements about the whole semigroup.
template <ScalarMode S>
class Weight {
public:
    static constexpr int kAllDepths = std::numeric_limits<int>::max();

    using Eval = std::function<S(const Element&)>;
    /// (k, s) -> closed-form value of the k-th iterated weight at s.
    using ClosedTilde = std::function<S(int, const Element&)>;
    /// (base_k, t, m) -> upper bound on sup over s outside W(m) of
    /// tilde_k(ts)/tilde_k(s), or nullopt when no certificate applies.
    using TailBound = std::function<std::optional<S>(int, const Element&, int)>;

    Weight() = default;
    Weight(std::string id, Eval eval) : id_(std::move(id)), eval_(std::move(eval)) {}

    const std::string& id() const { return id_; }

    S operator()(const Element& e) const { return eval_(e); }
    const Eval& eval() const { return eval_; }

    void set_closed_tilde(int max_k, ClosedTilde fn) {
        closed_max_k_ = max_k;
        closed_tilde_ = std::move(fn);
    }
    bool has_closed_tilde(int k) const { return k >= 1 && k <= closed_max_k_ && closed_tilde_ != nullptr; }
    S closed_tilde(int k, const Element& e) const {
        if (!has_closed_tilde(k))
            throw UnsupportedQuery("no closed form for the iterated weight at depth " + std::to_string(k));
        return closed_tilde_(k, e);
    }

    void set_ratio_tail_bound(TailBound fn) { tail_ = std::move(fn); }
    std::optional<S> ratio_tail_bound(int base_k, const Element& t, int m) const {
        if (!tail_) return std::nullopt;
        return tail_(base_k, t, m);
    }

    /// Evaluator for iterate level k: 0 is the weight itself, higher levels
    /// use the closed form or refuse.
    Eval level(int k) const {
        if (k == 0) return eval_;
        if (!has_closed_tilde(k))
            throw UnsupportedQuery("no closed form for the iterated weight at depth " + std::to_string(k));
        ClosedTilde fn = closed_tilde_;
        return [fn, k](const Element& e) { return fn(k, e); };
    }

private:
    std::string id_;
    Eval eval_;
    int closed_max_k_ = 0;
    ClosedTilde closed_tilde_;
    TailBound tail_;
};

/// Weight backed by a parsed expression; positivity is enforced per call.
template <ScalarMode S>
Weight<S> weight_from_expr(const WeightExpr& expr, std::string id) {
    return Weight<S>(std::move(id), [expr](const Element& e) { return eval_weight_expr<S>(expr, e); });
}

} // namespace wsa
