#pragma once

#include "wsa/finsupp.hpp"
#include "wsa/iterated.hpp"
#include "wsa/kernels.hpp"
#include "wsa/semigroup.hpp"
#include "wsa/weight.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wsa {

/// tilde_1 value together with whether it is the true supremum over S
/// (closed form or a tail certificate) rather than a window lower bound.
template <ScalarMode S>
struct CertifiedValue {
    S value;
    bool certified = false;
};

template <ScalarMode S>
CertifiedValue<S> certified_tilde1(const Weight<S>& w, const Semigroup& sg, const Element& t, int m,
                                   double rtol = kDefaultTolerance) {
    if (w.has_closed_tilde(1)) return {w.closed_tilde(1, t), true};
    auto bound = tilde_bound<S>(w, sg, 1, t, m, rtol);
    return {bound.lower, bound.exact_on_S};
}

enum class FPropertyStatus { satisfied_witness, refuted_certified, refuted_on_window, inconclusive };

std::string to_string(FPropertyStatus s);

struct FPropertyQuery {
    std::vector<Element> T;
    Rational r; // threshold fraction, 0 < r < 1
    int window_m = 1;
};

template <ScalarMode S>
struct FPropertyVerdict {
    FPropertyStatus status = FPropertyStatus::inconclusive;
    std::optional<Element> witness;
    /// per t_i: the window portion of E_i = {s : w(t_i s)/w(s) >= r tilde1(t_i)}
    std::vector<std::pair<Element, std::vector<Element>>> ratio_sets;
    std::string tail_note;
    bool tilde1_certified = false;
};

/// Scans W(m) for an s with w(t_i s)/w(s) >= r tilde1(t_i) for every i.
/// The ">=" is read literally. A found witness is re-verified by direct
/// evaluation. With no witness, tail certificates (when enabled and
/// available) upgrade the window refutation to one over all of S; without
/// certified tilde1 values the verdict is capped at the window level.
template <ScalarMode S>
FPropertyVerdict<S> fproperty_search(const Weight<S>& w, const Semigroup& sg, const FPropertyQuery& query,
                                     bool use_tail = true, double rtol = kDefaultTolerance) {
    if (query.T.empty()) throw DomainError("F-property query needs a non-empty finite set");
    if (!(Rational(0) < query.r && query.r < Rational(1)))
        throw DomainError("F-property threshold r must satisfy 0 < r < 1");

    const S r = scalar_from_rational<S>(query.r);
    const std::vector<Element> window = sg.window(query.window_m);

    std::vector<S> thresholds;
    bool certified = true;
    for (const Element& t : query.T) {
        auto tilde = certified_tilde1<S>(w, sg, t, query.window_m, rtol);
        certified = certified && tilde.certified;
        thresholds.push_back(r * tilde.value);
    }

    auto ratio = [&](const Element& t, const Element& s) { return w(sg.compose(t, s)) / w(s); };

    FPropertyVerdict<S> verdict;
    verdict.tilde1_certified = certified;
    for (std::size_t i = 0; i < query.T.size(); ++i) {
        const Element& t = query.T[i];
        auto hits = kernels::collect(window.size(),
                                     [&](std::size_t j) { return !(ratio(t, window[j]) < thresholds[i]); });
        std::vector<Element> set;
        set.reserve(hits.size());
        for (std::size_t j : hits) set.push_back(window[j]);
        verdict.ratio_sets.emplace_back(t, std::move(set));
    }

    auto in_all = kernels::find_first(window.size(), [&](std::size_t j) {
        for (std::size_t i = 0; i < query.T.size(); ++i)
            if (ratio(query.T[i], window[j]) < thresholds[i]) return false;
        return true;
    });

    if (in_all) {
        const Element& s = window[*in_all];
        // independent re-check before reporting
        for (std::size_t i = 0; i < query.T.size(); ++i)
            if (ratio(query.T[i], s) < thresholds[i])
                throw DomainError("witness re-verification failed; non-deterministic weight?");
        if (certified) {
            verdict.status = FPropertyStatus::satisfied_witness;
            verdict.witness = s;
        } else {
            verdict.status = FPropertyStatus::inconclusive;
            verdict.tail_note = "candidate witness " + s.str() + " found, but tilde1 thresholds are window lower bounds only";
        }
        return verdict;
    }

    if (certified && use_tail) {
        for (std::size_t i = 0; i < query.T.size(); ++i) {
            auto tail = w.ratio_tail_bound(0, query.T[i], query.window_m);
            if (tail && *tail < thresholds[i]) {
                verdict.status = FPropertyStatus::refuted_certified;
                verdict.tail_note = "outside W(" + std::to_string(query.window_m) + ") the ratio for t=" +
                                    query.T[i].str() + " stays below " + tail->str() + " < r*tilde1";
                return verdict;
            }
        }
    }
    verdict.status = FPropertyStatus::refuted_on_window;
    verdict.tail_note = certified ? "no tail certificate applied; refutation is window-relative"
                                  : "tilde1 thresholds are window lower bounds only";
    return verdict;
}

enum class EtaDirection { increasing, decreasing };

std::string to_string(EtaDirection d);

struct EtaViolation {
    Element t;
    Element first, second; // consecutive window elements in the wrong order
};

struct MonotoneCertificate {
    EtaDirection direction = EtaDirection::decreasing;
    int checked_window = 1;
    std::vector<EtaViolation> violations;
    bool clean() const { return violations.empty(); }
};

/// Verifies monotonicity of eta_t(s) = w(ts)/w(s) on consecutive window
/// elements for each t in T. Needs a totally ordered semigroup whose order
/// probe is clean on the window. A clean certificate covers every finite
/// subset of T and every r < 1 via the max/min argument.
template <ScalarMode S>
MonotoneCertificate monotone_eta_certificate(const Weight<S>& w, const Semigroup& sg,
                                             const std::vector<Element>& T, int m, EtaDirection direction,
                                             double rtol = kDefaultTolerance) {
    if (!sg.totally_ordered()) throw UnsupportedQuery("semigroup " + sg.id() + " carries no total order");
    if (auto bad = probe_order_compatibility(sg, m))
        throw UnsupportedQuery("order is not compatible with composition on the window (triple " +
                               bad->a.str() + "," + bad->b.str() + "," + bad->c.str() + ")");
    const std::vector<Element> window = sg.window(m);
    MonotoneCertificate cert;
    cert.direction = direction;
    cert.checked_window = m;
    auto eta = [&](const Element& t, const Element& s) { return w(sg.compose(t, s)) / w(s); };
    for (const Element& t : T) {
        for (std::size_t j = 0; j + 1 < window.size(); ++j) {
            S a = eta(t, window[j]);
            S b = eta(t, window[j + 1]);
            bool ok = direction == EtaDirection::increasing ? !exceeds(a, b, rtol) : !exceeds(b, a, rtol);
            if (!ok) cert.violations.push_back({t, window[j], window[j + 1]});
        }
    }
    return cert;
}

template <ScalarMode S>
struct LimsupReport {
    Element s;
    S target;                                       // w(s)
    std::vector<std::pair<Element, S>> ratios;      // (t_k, w(s+t_k)/w(t_k)), t_k = 1/k
    S running_max;
    bool reached = false;                           // running max within tolerance of w(s)
};

/// Numerical evidence for w(s) <= limsup_{t->0+} w(s+t)/w(t) along t_k = 1/k.
/// Evidence only: it never certifies anything by itself.
template <ScalarMode S>
LimsupReport<S> limsup_certificate(const Weight<S>& w, const Semigroup& sg, const Element& s, int k_max,
                                   double rtol = kDefaultTolerance) {
    if (sg.element_kind() != ElementKind::fraction)
        throw UnsupportedQuery("limsup probing needs a dense subsemigroup of the positive reals");
    LimsupReport<S> report;
    report.s = s;
    report.target = w(s);
    report.running_max = S::zero();
    for (int k = 1; k <= k_max; ++k) {
        Element t = Element::fraction(1, k);
        S value = w(sg.compose(s, t)) / w(t);
        if (report.running_max < value) report.running_max = value;
        report.ratios.emplace_back(t, value);
    }
    report.reached = approx_le(report.target, report.running_max, rtol);
    return report;
}

enum class RegularityStatus { regular_certified, not_regular_certified, unknown };

std::string to_string(RegularityStatus s);

struct RegularityVerdict {
    RegularityStatus status = RegularityStatus::unknown;
    std::vector<std::string> evidence;
};

struct RegularityConfig {
    int window_m = 12;
    std::optional<EtaDirection> eta_direction; // enables the monotone certificate
    std::vector<Element> eta_set;              // elements to probe for monotonicity
    double rtol = kDefaultTolerance;
};

/// Combines the closed-form tilde1-vs-weight comparison with an F-property
/// certificate. Emits "unknown" rather than guessing whenever either leg is
/// only numerical evidence.
template <ScalarMode S>
RegularityVerdict regularity_verdict(const Weight<S>& w, const Semigroup& sg, const RegularityConfig& cfg) {
    RegularityVerdict verdict;
    if (!w.has_closed_tilde(1)) {
        verdict.status = RegularityStatus::unknown;
        verdict.evidence.push_back("no closed form for tilde1; window bounds alone cannot certify either way");
        return verdict;
    }
    const std::vector<Element> window = sg.window(cfg.window_m);
    // A certified strict gap tilde1(t) < w(t) gives |delta_t|_op <= tilde1(t) < |delta_t|_w.
    for (const Element& t : window) {
        S closed = w.closed_tilde(1, t);
        S direct = w(t);
        if (exceeds(direct, closed, cfg.rtol)) {
            verdict.status = RegularityStatus::not_regular_certified;
            verdict.evidence.push_back("strict gap at t=" + t.str() + ": tilde1=" + closed.str() + " < w=" +
                                       direct.str());
            return verdict;
        }
    }
    bool all_equal = true;
    for (const Element& t : window)
        if (!approx_eq(w.closed_tilde(1, t), w(t), cfg.rtol)) all_equal = false;
    if (!all_equal) {
        verdict.status = RegularityStatus::unknown;
        verdict.evidence.push_back("tilde1 differs from w on the window without a certified strict gap");
        return verdict;
    }
    verdict.evidence.push_back("closed form asserts tilde1 = w; verified pointwise on W(" +
                               std::to_string(cfg.window_m) + ")");
    if (cfg.eta_direction && !cfg.eta_set.empty()) {
        auto cert = monotone_eta_certificate<S>(w, sg, cfg.eta_set, cfg.window_m, *cfg.eta_direction, cfg.rtol);
        if (cert.clean()) {
            verdict.status = RegularityStatus::regular_certified;
            verdict.evidence.push_back("monotone eta certificate (" + to_string(*cfg.eta_direction) +
                                       ") clean on W(" + std::to_string(cfg.window_m) + ")");
            return verdict;
        }
        verdict.evidence.push_back("monotone eta certificate has violations");
    }
    verdict.status = RegularityStatus::unknown;
    verdict.evidence.push_back("tilde1 = w holds but no F-property certificate is available");
    return verdict;
}

} // namespace wsa
