#pragma once

#include "wsa/fproperty.hpp"
#include "wsa/opnorm.hpp"

#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace wsa {

struct RowResult {
    bool pass = false;
    std::string measured;
    std::string expected;
};

/// One machine-checkable claim: quantity id, provenance ("original" for
/// values stated in the original worked examples, "derived" for values this
/// tool derives with its own oracles), tolerance note, and a runner.
struct ExpectedRow {
    std::string quantity;
    std::string provenance;
    std::string tolerance;
    std::function<RowResult()> run;
};

template <ScalarMode S>
struct CatalogEntry {
    std::string id;
    std::string description;
    std::shared_ptr<const Semigroup> semigroup;
    Weight<S> weight;
    RegularityConfig regularity;
    std::vector<std::string> notes; // discrepancy annotations, shown by `report`
    std::vector<ExpectedRow> expected;
};

std::vector<std::string> catalog_ids();

struct CatalogInfo {
    std::string id;
    std::string description;
    std::string preferred_mode; // "exact" or "log"
    bool has_notes = false;
};
std::vector<CatalogInfo> catalog_list();
std::string catalog_preferred_mode(const std::string& id);

struct VerifiedRow {
    std::string quantity;
    std::string provenance;
    std::string tolerance;
    std::string measured;
    std::string expected;
    bool pass = false;
};

/// Runs the expected table of one entry in its preferred numeric mode.
std::vector<VerifiedRow> run_expected_table(const std::string& id);
std::vector<std::string> entry_notes(const std::string& id);

namespace catalog_detail {

template <ScalarMode S>
S four_pow(long long n) {
    return S::from_ratio(4, 1).pow_int(n);
}

template <ScalarMode S>
RowResult check_scalar(const S& measured, const S& expected, double rtol) {
    RowResult r;
    r.measured = measured.str();
    r.expected = expected.str();
    r.pass = approx_eq(measured, expected, rtol);
    return r;
}

inline RowResult check_flag(bool ok, const std::string& measured, const std::string& expected) {
    return {ok, measured, expected};
}

template <ScalarMode S>
CatalogEntry<S> build_nmin_piecewise() {
    CatalogEntry<S> entry;
    entry.id = "NMIN-PIECEWISE";
    entry.description = "min semigroup on N with the piecewise weight 1@2, 2@4, 4^n elsewhere";
    entry.semigroup = make_nat_min();

    auto eval = [](const Element& e) -> S {
        if (e.num() == 2) return S::one();
        if (e.num() == 4) return S::from_ratio(2, 1);
        return four_pow<S>(e.num());
    };
    entry.weight = Weight<S>(entry.id, eval);

    // frozen table; derivation recorded in the entry notes, tilde2 = tilde1
    auto tilde1 = [](const Element& e) -> S {
        switch (e.num()) {
        case 1: return S::from_ratio(4, 1);
        case 2: return S::one();
        case 3: return S::from_ratio(32, 1);
        default: return S::one();
        }
    };
    entry.weight.set_closed_tilde(2, [tilde1](int, const Element& e) { return tilde1(e); });

    entry.weight.set_ratio_tail_bound([eval, tilde1](int base_k, const Element& t, int m) -> std::optional<S> {
        if (m < 4 || t.num() > m) return std::nullopt;
        // beyond W(m) with m >= 4 every s has w(s) = 4^s and tilde1(s) = 1
        if (base_k == 0) return eval(t) / four_pow<S>(m + 1);
        if (base_k == 1) return tilde1(t);
        return std::nullopt;
    });

    entry.notes = {
        "the original solution's intermediate bound 11 for the operator norm of d1+d3 is exceeded by the "
        "certified lower bound 34: bounding the n>=3 block by the full weighted norm fails at n=4 where "
        "w(3)=64 > w(4)=2; the strict gap that matters survives: 34 < 36",
        "at r = 1/2 the element s = 4 meets the t=1 threshold with equality, so under the literal non-strict "
        "reading the F-property refutation of the original solution holds only for r in (1/2, 1)",
        "nat-min is not right cancellative (the probe finds a counterexample), although the surrounding "
        "theory assumes it; faithfulness is probed separately through convolution",
        "tilde1 derived by exhaustive ratio maximization with the geometric tail: sup_s w(min(t,s))/w(s) = "
        "max(1, w(t)/min_{s>=t} w(s)), frozen as the table {1:4, 2:1, 3:32, 4:1, >=5:1}; tilde1 >= 1 "
        "pointwise and equals 1 from 5 on, so the iteration is stationary and tilde2 = tilde1",
    };

    auto sg = entry.semigroup;
    auto w = entry.weight;
    const double rtol = kDefaultTolerance;

    entry.expected.push_back({"tilde1(1) @ window 5", "original", "exact", [sg, w, rtol] {
        auto b = tilde_bound<S>(w, *sg, 1, Element::nat(1), 5, rtol);
        RowResult r = check_scalar<S>(b.lower, S::from_ratio(4, 1), rtol);
        r.pass = r.pass && b.witness_t == Element::nat(2) && b.exact_on_S;
        r.measured += " @ t=" + b.witness_t.str();
        r.expected += " @ t=2";
        return r;
    }});
    entry.expected.push_back({"tilde1(3) @ window 5", "original", "exact", [sg, w, rtol] {
        auto b = tilde_bound<S>(w, *sg, 1, Element::nat(3), 5, rtol);
        RowResult r = check_scalar<S>(b.lower, S::from_ratio(32, 1), rtol);
        r.pass = r.pass && b.witness_t == Element::nat(4) && b.exact_on_S;
        r.measured += " @ t=" + b.witness_t.str();
        r.expected += " @ t=4";
        return r;
    }});
    entry.expected.push_back({"weighted norm of d1+d3", "derived", "exact", [sg, w, rtol] {
        auto f = FinSupp<S>::delta(Element::nat(1)) + FinSupp<S>::delta(Element::nat(3));
        return check_scalar<S>(weighted_norm<S>(f, w), S::from_ratio(68, 1), rtol);
    }});
    entry.expected.push_back({"tilde1 norm of d1+d3", "original", "exact", [sg, w, rtol] {
        auto f = FinSupp<S>::delta(Element::nat(1)) + FinSupp<S>::delta(Element::nat(3));
        return check_scalar<S>(opnorm_upper_tilde<S>(f, w), S::from_ratio(36, 1), rtol);
    }});
    entry.expected.push_back({"opnorm lower of d1+d3 @ window 6", "derived", "exact", [sg, w, rtol] {
        auto f = FinSupp<S>::delta(Element::nat(1)) + FinSupp<S>::delta(Element::nat(3));
        auto lb = opnorm_lower<S>(*sg, w, f, 6);
        RowResult r = check_scalar<S>(lb.value, S::from_ratio(34, 1), rtol);
        r.pass = r.pass && lb.witness == Element::nat(4);
        r.measured += " @ s=" + lb.witness.str();
        r.expected += " @ s=4";
        return r;
    }});
    entry.expected.push_back({"alpha upper for T={1,3} at r=51/100", "derived", "exact", [sg, w, rtol] {
        std::vector<Element> T{Element::nat(1), Element::nat(3)};
        FPropertyQuery q{T, Rational(51, 100), 6};
        auto verdict = fproperty_search<S>(w, *sg, q, true, rtol);
        auto alpha = opnorm_alpha_upper<S>(*sg, w, T, q.r, verdict, 6, rtol);
        RowResult r = check_scalar<S>(alpha.alpha, scalar_from_rational<S>(Rational(851, 25)), rtol);
        r.pass = r.pass && alpha.valid;
        r.measured += alpha.valid ? " (valid)" : " (invalid)";
        r.expected += " (valid)";
        return r;
    }});
    entry.expected.push_back({"bisected alpha upper within 1e-6 of 34", "derived", "1e-6 absolute", [sg, w, rtol] {
        auto f = FinSupp<S>::delta(Element::nat(1)) + FinSupp<S>::delta(Element::nat(3));
        IntervalOptions opts;
        opts.alpha_r = Rational(51, 100);
        opts.bisect_steps = 32;
        auto interval = opnorm_interval<S>(*sg, w, f, 6, opts);
        S limit = scalar_from_rational<S>(Rational(34) + Rational(1, 1000000));
        bool ok = approx_le(interval.upper, limit, rtol) && interval.exact;
        return check_flag(ok, interval.upper.str() + (interval.exact ? " (exact)" : " (gap)"),
                          "<= 34 + 1e-6, exact bracket");
    }});
    entry.expected.push_back({"strict gap: opnorm < tilde1 norm", "derived", "exact", [sg, w, rtol] {
        auto f = FinSupp<S>::delta(Element::nat(1)) + FinSupp<S>::delta(Element::nat(3));
        IntervalOptions opts;
        opts.alpha_r = Rational(51, 100);
        auto interval = opnorm_interval<S>(*sg, w, f, 6, opts);
        S tilde_norm = opnorm_upper_tilde<S>(f, w);
        bool ok = interval.upper < tilde_norm && interval.lower < tilde_norm;
        return check_flag(ok, "[" + interval.lower.str() + ", " + interval.upper.str() + "] vs " +
                                  tilde_norm.str(),
                          "upper < 36");
    }});
    entry.expected.push_back({"F-property satisfied at r=1/2 with witness 4", "derived", "exact", [sg, w, rtol] {
        FPropertyQuery q{{Element::nat(1), Element::nat(3)}, Rational(1, 2), 6};
        auto verdict = fproperty_search<S>(w, *sg, q, true, rtol);
        bool ok = verdict.status == FPropertyStatus::satisfied_witness && verdict.witness &&
                  *verdict.witness == Element::nat(4);
        return check_flag(ok, to_string(verdict.status) + (verdict.witness ? " @ " + verdict.witness->str() : ""),
                          "satisfied-witness @ 4");
    }});
    entry.expected.push_back({"F-property refuted-certified at r=3/4, E1={2}, E2={4}", "derived", "exact",
                              [sg, w, rtol] {
        FPropertyQuery q{{Element::nat(1), Element::nat(3)}, Rational(3, 4), 6};
        auto verdict = fproperty_search<S>(w, *sg, q, true, rtol);
        bool sets_ok = verdict.ratio_sets.size() == 2 &&
                       verdict.ratio_sets[0].second == std::vector<Element>{Element::nat(2)} &&
                       verdict.ratio_sets[1].second == std::vector<Element>{Element::nat(4)};
        bool ok = verdict.status == FPropertyStatus::refuted_certified && sets_ok;
        std::ostringstream sets;
        for (const auto& [t, set] : verdict.ratio_sets) {
            sets << " E(" << t.str() << ")={";
            for (std::size_t i = 0; i < set.size(); ++i) sets << (i ? "," : "") << set[i].str();
            sets << "}";
        }
        return check_flag(ok, to_string(verdict.status) + sets.str(), "refuted-certified E(1)={2} E(3)={4}");
    }});
    entry.expected.push_back({"regularity verdict", "derived", "exact", [sg, w] {
        RegularityConfig cfg;
        auto verdict = regularity_verdict<S>(w, *sg, cfg);
        return check_flag(verdict.status == RegularityStatus::not_regular_certified, to_string(verdict.status),
                          "NOT_REGULAR_CERTIFIED");
    }});
    return entry;
}

template <ScalarMode S>
CatalogEntry<S> build_nat_gauss() {
    if constexpr (S::is_exact) {
        throw ConfigError("NAT-GAUSS needs log mode: e^(-n^2) is irrational");
    } else {
        CatalogEntry<S> entry;
        entry.id = "NAT-GAUSS";
        entry.description = "additive N with the super-exponentially decaying weight e^(-n^2)";
        entry.semigroup = make_nat_add();

        auto nat_val = [](const Element& e) { return static_cast<double>(e.num()); };
        entry.weight = Weight<S>(entry.id, [nat_val](const Element& e) {
            double n = nat_val(e);
            return S::from_log(-n * n);
        });
        entry.weight.set_closed_tilde(Weight<S>::kAllDepths, [nat_val](int k, const Element& e) {
            double n = nat_val(e);
            return S::from_log(-n * n - 2.0 * k * n);
        });
        // ratio of level-k iterates: e^(-t^2 - 2ts - 2kt), decreasing in s,
        // so the sup outside W(m) sits at s = m+1
        entry.weight.set_ratio_tail_bound([nat_val](int base_k, const Element& t, int m) -> std::optional<S> {
            double tv = nat_val(t);
            return S::from_log(-tv * tv - 2.0 * tv * (m + 1) - 2.0 * base_k * tv);
        });

        auto sg = entry.semigroup;
        auto w = entry.weight;

        entry.expected.push_back({"window bound matches e^(-n^2-2kn), n<=20, k in {1,2,3}", "original",
                                  "1e-12 relative", [sg, w] {
            for (int k = 1; k <= 3; ++k) {
                for (int n = 1; n <= 20; ++n) {
                    auto b = tilde_bound<S>(w, *sg, k, Element::nat(n), 10, 1e-12);
                    double expect = -double(n) * n - 2.0 * k * n;
                    if (!b.converged || b.witness_t != Element::nat(1))
                        return check_flag(false, "diverged at n=" + std::to_string(n) + ",k=" + std::to_string(k),
                                          "witness t=1, converged");
                    if (std::abs(b.lower.log_magnitude() - expect) > 1e-12)
                        return check_flag(false, "log=" + std::to_string(b.lower.log_magnitude()),
                                          "log=" + std::to_string(expect));
                }
            }
            return check_flag(true, "60/60 converged @ t=1", "60/60 converged @ t=1");
        }});
        entry.expected.push_back({"regularity verdict via gap at t=1", "original", "1e-9 relative", [sg, w] {
            RegularityConfig cfg;
            auto verdict = regularity_verdict<S>(w, *sg, cfg);
            bool ok = verdict.status == RegularityStatus::not_regular_certified && !verdict.evidence.empty() &&
                      verdict.evidence.front().find("t=1") != std::string::npos;
            return check_flag(ok, to_string(verdict.status), "NOT_REGULAR_CERTIFIED via t=1");
        }});
        entry.expected.push_back({"norm-chain ratio e^(-2n) decreasing to 0, n<=20", "original", "1e-12 relative",
                                  [sg, w] {
            double prev = 0.0;
            for (int n = 1; n <= 20; ++n) {
                auto dn = FinSupp<S>::delta(Element::nat(n));
                S top = weighted_norm<S>(dn, w.level(2));
                S bot = weighted_norm<S>(dn, w.level(1));
                double lg = (top / bot).log_magnitude();
                if (std::abs(lg - (-2.0 * n)) > 1e-12)
                    return check_flag(false, "log ratio " + std::to_string(lg) + " at n=" + std::to_string(n),
                                      std::to_string(-2.0 * n));
                if (n > 1 && lg >= prev)
                    return check_flag(false, "ratio not decreasing at n=" + std::to_string(n), "monotone");
                prev = lg;
            }
            return check_flag(true, "ratio e^(-2n), monotone down", "ratio e^(-2n), monotone down");
        }});
        entry.expected.push_back({"spectral radius running mins: k=0 vs k=1 offset 2", "derived", "1e-9 absolute",
                                  [sg, w] {
            auto e0 = spectral_radius_estimate<S>(w, *sg, 0, Element::nat(1), 20);
            auto e1 = spectral_radius_estimate<S>(w, *sg, 1, Element::nat(1), 20);
            bool ok = std::abs(e0.running_min + 20.0) < 1e-9 && std::abs(e1.running_min + 22.0) < 1e-9;
            return check_flag(ok,
                              "rm0=" + std::to_string(e0.running_min) + " rm1=" + std::to_string(e1.running_min),
                              "rm0=-20 rm1=-22");
        }});
        return entry;
    }
}

template <ScalarMode S>
CatalogEntry<S> build_qpos_denom() {
    CatalogEntry<S> entry;
    entry.id = "QPOS-DENOM";
    entry.description = "additive positive rationals weighted by the reduced denominator";
    entry.semigroup = make_qpos_add();
    entry.weight = Weight<S>(entry.id, [](const Element& e) { return S::from_ratio(e.den(), 1); });
    // tilde1 = w: the denominator of t+s divides den(t) den(s), so ratios
    // never exceed den(t), and 1/p for a prime p > den(t) attains it
    entry.weight.set_closed_tilde(1, [](int, const Element& e) { return S::from_ratio(e.den(), 1); });
    entry.weight.set_ratio_tail_bound([](int base_k, const Element& t, int) -> std::optional<S> {
        if (base_k != 0) return std::nullopt;
        return S::from_ratio(t.den(), 1);
    });
    entry.notes = {
        "regularity: tilde1 = w is certified, but eta_t is not monotone for this weight, so no F-property "
        "certificate applies and the two-leg verdict stays UNKNOWN even though the limsup route concludes "
        "regular",
    };

    auto sg = entry.semigroup;
    auto w = entry.weight;
    const double rtol = kDefaultTolerance;

    entry.expected.push_back({"tilde1 lower reaches den exactly @ window 11", "original", "exact", [sg, w, rtol] {
        const std::vector<std::pair<Element, int>> cases = {
            {Element::fraction(1, 2), 3}, {Element::fraction(2, 3), 5},
            {Element::fraction(3, 4), 5}, {Element::fraction(5, 7), 11}};
        for (const auto& [t, prime] : cases) {
            auto b = tilde_bound<S>(w, *sg, 1, t, 11, rtol);
            if (!(b.lower == S::from_ratio(t.den(), 1)) || !b.exact_on_S)
                return check_flag(false, t.str() + " -> " + b.lower.str(), "den, certified on all of S");
            // the witness construction 1/p, p the first prime past the
            // denominator, must realize the sup inside the window
            Element probe = Element::fraction(1, prime);
            S ratio = w(sg->compose(t, probe)) / w(probe);
            if (!(ratio == S::from_ratio(t.den(), 1)))
                return check_flag(false, "construction ratio " + ratio.str() + " at 1/" + std::to_string(prime),
                                  "den");
        }
        return check_flag(true, "4/4 reach den, construction 1/p verified", "4/4");
    }});
    entry.expected.push_back({"closed form tilde1 = w checks out @ window 7", "original", "exact", [sg, w, rtol] {
        std::vector<Element> elems = {Element::fraction(1, 2), Element::fraction(2, 3), Element::fraction(3, 4),
                                      Element::fraction(5, 7)};
        auto report = tilde_closed_form_check<S>(w, *sg, 1, 7, elems, rtol);
        bool ok = report.all_lower_le_closed && report.all_converged && report.closed_submultiplicative &&
                  report.descent_clean;
        return check_flag(ok, ok ? "clean" : "violated", "clean");
    }});
    entry.expected.push_back({"regularity verdict (see notes)", "derived", "exact", [sg, w] {
        RegularityConfig cfg;
        auto verdict = regularity_verdict<S>(w, *sg, cfg);
        return check_flag(verdict.status == RegularityStatus::unknown, to_string(verdict.status),
                          "UNKNOWN (two-leg rule)");
    }});
    return entry;
}

template <ScalarMode S>
CatalogEntry<S> build_qpos_gauss() {
    if constexpr (S::is_exact) {
        throw ConfigError("QPOS-GAUSS needs log mode: e^(-s^2) is irrational");
    } else {
        CatalogEntry<S> entry;
        entry.id = "QPOS-GAUSS";
        entry.description = "additive positive rationals with the weight e^(-s^2)";
        entry.semigroup = make_qpos_add();
        auto val = [](const Element& e) {
            double v = static_cast<double>(e.num()) / static_cast<double>(e.den());
            return -v * v;
        };
        entry.weight = Weight<S>(entry.id, [val](const Element& e) { return S::from_log(val(e)); });
        // tilde1 = w, supplied analytically: ratios e^(-t^2-2ts) climb to
        // e^(-t^2) as s drops to 0, so window sups stay strictly short
        entry.weight.set_closed_tilde(1, [val](int, const Element& e) { return S::from_log(val(e)); });
        entry.weight.set_ratio_tail_bound([val](int base_k, const Element& t, int) -> std::optional<S> {
            if (base_k != 0) return std::nullopt;
            return S::from_log(val(t));
        });
        entry.notes = {
            "the window sup for tilde1 is never attained: bounds stay a factor e^(-2t/m) short of e^(-t^2); "
            "the closed form tilde1 = w is supplied analytically and validated by the limsup probe",
        };

        auto sg = entry.semigroup;
        auto w = entry.weight;

        entry.expected.push_back({"limsup ratio at t=1/50 within factor e^(-2s/50) of w(s)", "original",
                                  "1e-12 absolute on logs", [sg, w] {
            for (const Element& s : {Element::fraction(1, 2), Element::nat(1), Element::nat(2)}) {
                auto report = limsup_certificate<S>(w, *sg, s, 50);
                double sv = static_cast<double>(s.num()) / static_cast<double>(s.den());
                double measured = report.ratios.back().second.log_magnitude() - report.target.log_magnitude();
                if (std::abs(measured - (-2.0 * sv / 50.0)) > 1e-12)
                    return check_flag(false, "log gap " + std::to_string(measured) + " at s=" + s.str(),
                                      std::to_string(-2.0 * sv / 50.0));
            }
            return check_flag(true, "3/3 gaps match e^(-2s/50)", "3/3");
        }});
        entry.expected.push_back({"decreasing eta certificate clean @ window 12", "derived", "1e-9 relative",
                                  [sg, w] {
            std::vector<Element> T = {Element::fraction(1, 2), Element::nat(1), Element::nat(2)};
            auto cert = monotone_eta_certificate<S>(w, *sg, T, 12, EtaDirection::decreasing);
            return check_flag(cert.clean(), cert.clean() ? "clean" : "violations", "clean");
        }});
        entry.expected.push_back({"regularity verdict", "original", "1e-9 relative", [sg, w] {
            RegularityConfig cfg;
            cfg.eta_direction = EtaDirection::decreasing;
            cfg.eta_set = {Element::fraction(1, 2), Element::nat(1), Element::nat(2)};
            auto verdict = regularity_verdict<S>(w, *sg, cfg);
            return check_flag(verdict.status == RegularityStatus::regular_certified, to_string(verdict.status),
                              "REGULAR_CERTIFIED");
        }});

        entry.regularity.eta_direction = EtaDirection::decreasing;
        entry.regularity.eta_set = {Element::fraction(1, 2), Element::nat(1), Element::nat(2)};
        return entry;
    }
}

template <ScalarMode S>
FinSupp<S> random_real_finsupp(std::mt19937_64& rng, const std::vector<Element>& support_pool, int max_support) {
    std::uniform_int_distribution<int> size_dist(1, max_support);
    std::uniform_int_distribution<int> num_dist(-4, 4);
    std::uniform_int_distribution<int> den_dist(1, 3);
    std::uniform_int_distribution<std::size_t> pick(0, support_pool.size() - 1);
    for (;;) {
        FinSupp<S> f;
        int n = size_dist(rng);
        for (int i = 0; i < n; ++i) {
            int num = num_dist(rng);
            if (num == 0) num = 1;
            f.add_term(support_pool[pick(rng)], Complex<S>::real(S::from_ratio(num, den_dist(rng))));
        }
        if (!f.is_zero()) return f; // colliding terms can cancel
    }
}

template <ScalarMode S>
CatalogEntry<S> build_nmin_unit() {
    CatalogEntry<S> entry;
    entry.id = "NMIN-UNIT";
    entry.description = "min semigroup on N with the constant weight 1";
    entry.semigroup = make_nat_min();
    entry.weight = Weight<S>(entry.id, [](const Element&) { return S::one(); });
    entry.weight.set_closed_tilde(Weight<S>::kAllDepths, [](int, const Element&) { return S::one(); });
    entry.weight.set_ratio_tail_bound([](int, const Element&, int) -> std::optional<S> { return S::one(); });
    entry.regularity.eta_direction = EtaDirection::decreasing;
    entry.regularity.eta_set = {Element::nat(1), Element::nat(2), Element::nat(3)};

    auto sg = entry.semigroup;
    auto w = entry.weight;
    entry.expected.push_back({"opnorm equals the l1 norm for 100 random f @ window k+1", "original", "exact",
                              [sg, w] {
        std::mt19937_64 rng(20240601);
        std::uniform_int_distribution<int> k_dist(1, 8);
        for (int trial = 0; trial < 100; ++trial) {
            int k = k_dist(rng);
            auto f = random_real_finsupp<S>(rng, sg->window(k), 4);
            auto lb = opnorm_lower<S>(*sg, w, f, k + 1);
            if (!(lb.value == weighted_norm<S>(f, w)))
                return check_flag(false, "mismatch at trial " + std::to_string(trial), "equal");
        }
        return check_flag(true, "100/100 equal", "100/100 equal");
    }});
    entry.expected.push_back({"regularity verdict", "original", "exact", [sg, w, entry] {
        auto verdict = regularity_verdict<S>(w, *sg, entry.regularity);
        return check_flag(verdict.status == RegularityStatus::regular_certified, to_string(verdict.status),
                          "REGULAR_CERTIFIED");
    }});
    return entry;
}

template <ScalarMode S>
CatalogEntry<S> build_nleft_unit() {
    CatalogEntry<S> entry;
    entry.id = "NLEFT-UNIT";
    entry.description = "left-zero semigroup on N (m*n = m) with the constant weight 1";
    entry.semigroup = make_nat_leftzero();
    entry.weight = Weight<S>(entry.id, [](const Element&) { return S::one(); });
    entry.weight.set_closed_tilde(Weight<S>::kAllDepths, [](int, const Element&) { return S::one(); });
    entry.weight.set_ratio_tail_bound([](int, const Element&, int) -> std::optional<S> { return S::one(); });
    entry.regularity.eta_direction = EtaDirection::decreasing;
    entry.regularity.eta_set = {Element::nat(1), Element::nat(2), Element::nat(3)};
    entry.notes = {
        "the left-zero law m*n = m satisfies ac = bc => a = b, so the right-cancellativity probe finds no "
        "counterexample despite the original text asserting the opposite; the report shows the probe result "
        "without guessing the intended convention",
    };

    auto sg = entry.semigroup;
    auto w = entry.weight;
    entry.expected.push_back({"convolving with delta_1 preserves the l1 norm", "original", "exact", [sg, w] {
        std::mt19937_64 rng(20240602);
        for (int trial = 0; trial < 100; ++trial) {
            auto f = random_real_finsupp<S>(rng, sg->window(8), 4);
            auto shifted = convolve<S>(*sg, f, FinSupp<S>::delta(Element::nat(1)));
            if (!(weighted_norm<S>(shifted, w) == weighted_norm<S>(f, w)))
                return check_flag(false, "norm changed at trial " + std::to_string(trial), "preserved");
            auto lb = opnorm_lower<S>(*sg, w, f, 8);
            if (!(lb.value == weighted_norm<S>(f, w)))
                return check_flag(false, "opnorm mismatch at trial " + std::to_string(trial), "equal");
        }
        return check_flag(true, "100/100 preserved", "100/100 preserved");
    }});
    entry.expected.push_back({"right-cancellativity probe finds none @ window 12", "derived", "exact", [sg] {
        auto witness = probe_right_cancellative(*sg, 12);
        return check_flag(!witness.has_value(), witness ? "counterexample found" : "none", "none");
    }});
    entry.expected.push_back({"regularity verdict", "original", "exact", [sg, w, entry] {
        auto verdict = regularity_verdict<S>(w, *sg, entry.regularity);
        return check_flag(verdict.status == RegularityStatus::regular_certified, to_string(verdict.status),
                          "REGULAR_CERTIFIED");
    }});
    return entry;
}

} // namespace catalog_detail

template <ScalarMode S>
CatalogEntry<S> catalog_build(const std::string& id) {
    if (id == "NMIN-PIECEWISE") return catalog_detail::build_nmin_piecewise<S>();
    if (id == "NAT-GAUSS") return catalog_detail::build_nat_gauss<S>();
    if (id == "QPOS-DENOM") return catalog_detail::build_qpos_denom<S>();
    if (id == "QPOS-GAUSS") return catalog_detail::build_qpos_gauss<S>();
    if (id == "NMIN-UNIT") return catalog_detail::build_nmin_unit<S>();
    if (id == "NLEFT-UNIT") return catalog_detail::build_nleft_unit<S>();
    throw ConfigError("unknown catalog id '" + id + "'");
}

} // namespace wsa
