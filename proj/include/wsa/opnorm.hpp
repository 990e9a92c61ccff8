#pragma once

#include "wsa/finsupp.hpp"
#include "wsa/fproperty.hpp"
#include "wsa/iterated.hpp"
#include "wsa/kernels.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wsa {

template <ScalarMode S>
struct LowerBound {
    S value;
    Element witness;
};

/// max over s in W(m) of |f * delta_s|_w / w(s): the extreme points of the
/// unit ball are the normalized point masses, so this sweep bounds the
/// operator norm from below and attains it when the sup is realized.
template <ScalarMode S>
LowerBound<S> opnorm_lower(const Semigroup& sg, const Weight<S>& w, const FinSupp<S>& f, int m) {
    if (f.is_zero()) throw DomainError("operator norm probe needs a nonzero element");
    const std::vector<Element> window = sg.window(m);
    auto best = kernels::sweep_max<S>(window.size(), [&](std::size_t i) {
        const Element& s = window[i];
        return weighted_norm<S>(convolve(sg, f, FinSupp<S>::delta(s)), w) / w(s);
    });
    return {best->value, window[best->index]};
}

/// |f|_{tilde1}: the main upper bound for the operator norm. Needs the
/// closed form; without it no certified upper bound exists on this route.
template <ScalarMode S>
S opnorm_upper_tilde(const FinSupp<S>& f, const Weight<S>& w) {
    if (!w.has_closed_tilde(1))
        throw UnsupportedQuery("tilde-norm upper bound needs a closed form for tilde1");
    return weighted_norm<S>(f, w.level(1));
}

/// The converse-construction bound: with the F-property refuted for (T, r),
/// alpha = max over assignments a_i in {r,1}, not all 1, of sum a_i tilde1(t_i)
/// certifiably dominates |sum delta_{t_i}|_op.
template <ScalarMode S>
struct AlphaBound {
    std::vector<Element> T;
    Rational r;
    S alpha;
    bool valid = false;
};

template <ScalarMode S>
AlphaBound<S> opnorm_alpha_upper(const Semigroup& sg, const Weight<S>& w, const std::vector<Element>& T,
                                 const Rational& r, const FPropertyVerdict<S>& refutation, int m,
                                 double rtol = kDefaultTolerance) {
    if (T.empty()) throw DomainError("alpha bound needs a non-empty set");
    if (T.size() > 20) throw DomainError("alpha bound enumerates 2^n assignments; |T| > 20 refused");
    AlphaBound<S> out;
    out.T = T;
    out.r = r;
    std::vector<S> tildes;
    for (const Element& t : T) {
        auto c = certified_tilde1<S>(w, sg, t, m, rtol);
        if (!c.certified)
            throw UnsupportedQuery("alpha bound needs certified tilde1 values (closed form or tail certificate)");
        tildes.push_back(c.value);
    }
    const S rs = scalar_from_rational<S>(r);
    const std::size_t n = T.size();
    std::optional<S> best;
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        // bit set = that index takes the factor r; at least one must
        S total = S::zero();
        for (std::size_t i = 0; i < n; ++i) total += (mask >> i & 1) ? rs * tildes[i] : tildes[i];
        if (!best || *best < total) best = total;
    }
    out.alpha = *best;
    out.valid = refutation.status == FPropertyStatus::refuted_certified;
    return out;
}

/// Certified two-sided bracket for the operator norm.
template <ScalarMode S>
struct NormInterval {
    S lower;
    Element lower_witness;
    S upper;
    std::string upper_method; // tilde-norm | alpha-bound | min-of-both | weighted-norm
    bool exact = false;
    int window_m = 1;
    std::vector<std::string> flags;
};

struct IntervalOptions {
    std::optional<Rational> alpha_r; // enables the alpha route for unit-coefficient elements
    int bisect_steps = 10;           // extra refinement of r toward the refutation boundary
    bool use_tail = true;
    double rtol = kDefaultTolerance;
    Rational exact_tol = Rational(1, 1000000000); // absolute slack for the exact-mode exactness flag
};

template <ScalarMode S>
NormInterval<S> opnorm_interval(const Semigroup& sg, const Weight<S>& w, const FinSupp<S>& f, int m,
                                const IntervalOptions& opts = {}) {
    NormInterval<S> out;
    out.window_m = m;
    auto lower = opnorm_lower<S>(sg, w, f, m);
    out.lower = lower.value;
    out.lower_witness = lower.witness;

    // |a|_op <= |a| makes the plain weighted norm a last-resort upper bound.
    S upper = weighted_norm<S>(f, w);
    std::string method = "weighted-norm";

    std::optional<S> tilde_upper;
    if (w.has_closed_tilde(1)) {
        tilde_upper = opnorm_upper_tilde<S>(f, w);
        if (*tilde_upper < upper || method == "weighted-norm") {
            upper = *tilde_upper;
            method = "tilde-norm";
        }
    }

    std::optional<S> alpha_upper;
    if (opts.alpha_r) {
        bool unit = true;
        for (const auto& [s, c] : f.coeffs())
            if (!(c.im.is_zero() && c.re == S::one())) unit = false;
        if (!unit) {
            out.flags.push_back("alpha route skipped: element is not a sum of unit point masses");
        } else {
            std::vector<Element> T;
            for (const auto& [s, c] : f.coeffs()) T.push_back(s);
            Rational r = *opts.alpha_r;
            FPropertyQuery query{T, r, m};
            auto verdict = fproperty_search<S>(w, sg, query, opts.use_tail, opts.rtol);
            if (verdict.status == FPropertyStatus::refuted_certified) {
                // refutation validity is monotone in r: shrink r toward the
                // boundary to tighten alpha
                Rational lo(0), hi = r;
                for (int step = 0; step < opts.bisect_steps; ++step) {
                    Rational mid = (lo + hi) / Rational(2);
                    if (!(Rational(0) < mid && mid < Rational(1))) break;
                    FPropertyQuery probe{T, mid, m};
                    auto v = fproperty_search<S>(w, sg, probe, opts.use_tail, opts.rtol);
                    if (v.status == FPropertyStatus::refuted_certified) hi = mid;
                    else lo = mid;
                }
                auto bound = opnorm_alpha_upper<S>(sg, w, T, hi, verdict, m, opts.rtol);
                alpha_upper = bound.alpha;
                out.flags.push_back("alpha bound at r=" + hi.str() + " after " +
                                    std::to_string(opts.bisect_steps) + " bisection steps");
                if (*alpha_upper < upper) {
                    upper = *alpha_upper;
                    method = "alpha-bound";
                }
            } else {
                out.flags.push_back("alpha route unavailable: F-property not refuted-certified at r=" + r.str() +
                                    " (" + to_string(verdict.status) + ")");
            }
        }
    }

    if (tilde_upper && alpha_upper && !(upper < *tilde_upper) && !(upper < *alpha_upper))
        method = "min-of-both";

    out.upper = upper;
    out.upper_method = method;
    if constexpr (S::is_exact) {
        out.exact = (out.upper - out.lower) <= scalar_from_rational<S>(opts.exact_tol);
    } else {
        out.exact = approx_eq(out.lower, out.upper, opts.rtol);
    }
    return out;
}

/// Convergence report for |delta_t|_op vs tilde1(t).
template <ScalarMode S>
struct DeltaOpnormReport {
    Element t;
    S tilde1;
    S lower;
    Element witness;
    bool matched = false;
    std::optional<int> window_needed; // smallest window where the bound meets tilde1
};

template <ScalarMode S>
DeltaOpnormReport<S> delta_opnorm_check(const Semigroup& sg, const Weight<S>& w, const Element& t, int m,
                                        double rtol = kDefaultTolerance) {
    if (!w.has_closed_tilde(1)) throw UnsupportedQuery("delta opnorm check needs a closed form for tilde1");
    DeltaOpnormReport<S> report;
    report.t = t;
    report.tilde1 = w.closed_tilde(1, t);
    auto f = FinSupp<S>::delta(t);
    for (int mm = 1; mm <= m; ++mm) {
        auto lower = opnorm_lower<S>(sg, w, f, mm);
        report.lower = lower.value;
        report.witness = lower.witness;
        if (approx_eq(lower.value, report.tilde1, rtol)) {
            report.matched = true;
            report.window_needed = mm;
            break;
        }
    }
    return report;
}

/// Pointwise-product algebra on an index set: the operator norm collapses to
/// the sup norm, with the probe at the maximizing index verifying it.
template <ScalarMode S>
struct PointwiseOpNorm {
    S value;
    std::optional<Element> probe_x;
    S probe_norm;
};

template <ScalarMode S>
FinSupp<S> pointwise_product(const FinSupp<S>& f, const FinSupp<S>& g) {
    FinSupp<S> out;
    for (const auto& [x, c] : f.coeffs()) {
        auto other = g.at(x);
        if (!other.is_zero()) out.set(x, c * other);
    }
    return out;
}

/// Weighted p-norm raised to the p-th power: sum of (|f(x)| w(x))^p. Exact in
/// both modes, which is what the algebra inequalities compare.
template <ScalarMode S>
S pointwise_pnorm_pow(const FinSupp<S>& f, const typename Weight<S>::Eval& value, int p) {
    std::vector<S> terms;
    terms.reserve(f.support_size());
    for (const auto& [x, c] : f.coeffs()) terms.push_back((c.modulus() * value(x)).pow_int(p));
    return S::sum(terms);
}

/// The p-norm itself; p = 1 is exact, higher p takes a log-domain root.
template <ScalarMode S>
S pointwise_pnorm(const FinSupp<S>& f, const typename Weight<S>::Eval& value, int p) {
    if (p < 1) throw DomainError("p-norm needs p >= 1");
    if (p == 1) return pointwise_pnorm_pow<S>(f, value, 1);
    if constexpr (S::is_exact) {
        throw ModeError("p-th roots are irrational in exact mode; compare p-th powers or rerun in log mode");
    } else {
        return pointwise_pnorm_pow<S>(f, value, p).root(p);
    }
}

template <ScalarMode S>
PointwiseOpNorm<S> pointwise_opnorm(const std::vector<Element>& index_window,
                                    const typename Weight<S>::Eval& value, int p, const FinSupp<S>& f) {
    if (p < 1) throw DomainError("pointwise algebra needs 1 <= p < infinity");
    const S one = S::one();
    for (const Element& x : index_window)
        if (value(x) < one) throw DomainError("pointwise algebra needs w >= 1; fails at x=" + x.str());
    for (const auto& [x, c] : f.coeffs())
        if (value(x) < one) throw DomainError("pointwise algebra needs w >= 1; fails at x=" + x.str());

    PointwiseOpNorm<S> out;
    out.value = sup_norm(f);
    out.probe_norm = S::zero();
    if (f.is_zero()) return out;
    for (const auto& [x, c] : f.coeffs()) {
        if (c.modulus() == out.value) {
            out.probe_x = x;
            break;
        }
    }
    // probe with the normalized point mass at the maximizing index:
    // |f * delta_x / w(x)|_{pw} = |f(x)|, a single-term p-norm
    FinSupp<S> probe;
    probe.set(*out.probe_x, Complex<S>::real(one / value(*out.probe_x)));
    FinSupp<S> product = pointwise_product(f, probe);
    S term = S::zero();
    for (const auto& [x, c] : product.coeffs()) term = c.modulus() * value(x);
    out.probe_norm = term;
    return out;
}

} // namespace wsa
