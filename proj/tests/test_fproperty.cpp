#include "wsa/fproperty.hpp"

#include "wsa/catalog.hpp"

#include <doctest.h>

#include <random>

using namespace wsa;

namespace {

Weight<Rational> constant_weight_with_closed_form() {
    Weight<Rational> w("1", [](const Element&) { return Rational(1); });
    w.set_closed_tilde(Weight<Rational>::kAllDepths, [](int, const Element&) { return Rational(1); });
    w.set_ratio_tail_bound([](int, const Element&, int) -> std::optional<Rational> { return Rational(1); });
    return w;
}

} // namespace

TEST_CASE("every constant weight satisfies the F-property immediately") {
    auto add = make_nat_add();
    auto w = constant_weight_with_closed_form();
    FPropertyQuery q{{Element::nat(1), Element::nat(2), Element::nat(3)}, Rational(9, 10), 1};
    auto verdict = fproperty_search<Rational>(w, *add, q);
    CHECK(verdict.status == FPropertyStatus::satisfied_witness);
    CHECK(verdict.witness.value() == Element::nat(1));
    CHECK(verdict.tilde1_certified);
}

TEST_CASE("the piecewise min-semigroup weight fails the F-property for r past 1/2") {
    auto entry = catalog_build<Rational>("NMIN-PIECEWISE");
    std::vector<Element> T{Element::nat(1), Element::nat(3)};

    auto refuted = fproperty_search<Rational>(entry.weight, *entry.semigroup, {T, Rational(3, 4), 6});
    CHECK(refuted.status == FPropertyStatus::refuted_certified);
    CHECK(refuted.ratio_sets[0].second == std::vector<Element>{Element::nat(2)});
    CHECK(refuted.ratio_sets[1].second == std::vector<Element>{Element::nat(4)});
    CHECK(refuted.tail_note.find("t=1") != std::string::npos);

    auto satisfied = fproperty_search<Rational>(entry.weight, *entry.semigroup, {T, Rational(1, 2), 6});
    CHECK(satisfied.status == FPropertyStatus::satisfied_witness);
    CHECK(satisfied.witness.value() == Element::nat(4));
    // E sets at the boundary: s=4 meets the t=1 threshold with equality
    CHECK(satisfied.ratio_sets[0].second == std::vector<Element>{Element::nat(2), Element::nat(4)});
    CHECK(satisfied.ratio_sets[1].second == std::vector<Element>{Element::nat(4)});
}

TEST_CASE("without tail certificates refutation stays window-relative") {
    auto entry = catalog_build<Rational>("NMIN-PIECEWISE");
    std::vector<Element> T{Element::nat(1), Element::nat(3)};
    auto verdict = fproperty_search<Rational>(entry.weight, *entry.semigroup, {T, Rational(3, 4), 6}, false);
    CHECK(verdict.status == FPropertyStatus::refuted_on_window);
}

TEST_CASE("uncertified tilde1 caps the verdict") {
    auto expr = parse_weight_expr("pow(4, n)", ElementKind::natural);
    expr.overrides[Element::nat(2)] = Rational(1);
    expr.overrides[Element::nat(4)] = Rational(2);
    auto bare = weight_from_expr<Rational>(expr, "bare-piecewise");
    auto min = make_nat_min();

    // a candidate witness exists, but the thresholds are only lower bounds
    auto candidate = fproperty_search<Rational>(bare, *min, {{Element::nat(1)}, Rational(1, 2), 6});
    CHECK(candidate.status == FPropertyStatus::inconclusive);
    CHECK_FALSE(candidate.tilde1_certified);

    auto no_candidate =
        fproperty_search<Rational>(bare, *min, {{Element::nat(1), Element::nat(3)}, Rational(3, 4), 6});
    CHECK(no_candidate.status == FPropertyStatus::refuted_on_window);
}

TEST_CASE("witnesses persist as the window grows") {
    auto entry = catalog_build<Rational>("NMIN-PIECEWISE");
    std::vector<Element> T{Element::nat(1), Element::nat(3)};
    bool seen_witness = false;
    for (int m = 1; m <= 12; ++m) {
        auto verdict = fproperty_search<Rational>(entry.weight, *entry.semigroup, {T, Rational(1, 2), m});
        if (seen_witness) {
            CHECK(verdict.status == FPropertyStatus::satisfied_witness);
            CHECK(verdict.witness.value() == Element::nat(4));
        }
        // a certified refutation must never follow a witness at smaller m
        if (verdict.status == FPropertyStatus::satisfied_witness) seen_witness = true;
        CHECK((verdict.status != FPropertyStatus::refuted_certified || !seen_witness));
    }
    CHECK(seen_witness);
}

TEST_CASE("query validation") {
    auto entry = catalog_build<Rational>("NMIN-PIECEWISE");
    CHECK_THROWS_AS(
        fproperty_search<Rational>(entry.weight, *entry.semigroup, {{}, Rational(1, 2), 5}),
        DomainError);
    CHECK_THROWS_AS(
        fproperty_search<Rational>(entry.weight, *entry.semigroup, {{Element::nat(1)}, Rational(0), 5}),
        DomainError);
    CHECK_THROWS_AS(
        fproperty_search<Rational>(entry.weight, *entry.semigroup, {{Element::nat(1)}, Rational(1), 5}),
        DomainError);
}

TEST_CASE("finite semigroups: search with the full carrier matches exhaustive truth") {
    std::mt19937_64 rng(9091);
    for (int trial = 0; trial < 20; ++trial) {
        int size = 2 + int(rng() % 4);
        std::vector<int> perm(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) perm[std::size_t(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<int> inv(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) inv[std::size_t(perm[std::size_t(i)])] = i;
        std::vector<std::vector<int>> table(static_cast<std::size_t>(size), std::vector<int>(static_cast<std::size_t>(size)));
        for (int a = 0; a < size; ++a)
            for (int b = 0; b < size; ++b)
                table[std::size_t(a)][std::size_t(b)] =
                    perm[std::size_t((inv[std::size_t(a)] + inv[std::size_t(b)]) % size)] + 1;
        auto sg = make_cayley("cyclic", std::move(table));

        Weight<Rational> w("rand", [values = std::vector<Rational>{
                                        Rational(1 + int(rng() % 4)), Rational(1 + int(rng() % 4)),
                                        Rational(1 + int(rng() % 4)), Rational(1 + int(rng() % 4)),
                                        Rational(1 + int(rng() % 4)), Rational(1 + int(rng() % 4))}](
                                       const Element& e) { return values[std::size_t(e.num() - 1)]; });
        if (!check_submultiplicative<Rational>(w, *sg, 1).empty()) continue;

        auto carrier = sg->window(1);
        std::vector<Element> T = {carrier[0], carrier[std::size_t(rng() % carrier.size())]};
        Rational r(3, 4);

        // exhaustive truth over the whole (finite) semigroup
        auto tilde1 = [&](const Element& t) {
            Rational best(0);
            for (const Element& s : carrier) {
                Rational ratio = w(sg->compose(t, s)) / w(s);
                if (best < ratio) best = ratio;
            }
            return best;
        };
        bool truth = false;
        for (const Element& s : carrier) {
            bool all = true;
            for (const Element& t : T)
                if (w(sg->compose(t, s)) / w(s) < r * tilde1(t)) all = false;
            if (all) truth = true;
        }

        auto verdict = fproperty_search<Rational>(w, *sg, {T, r, 1});
        if (truth) {
            CHECK(verdict.status == FPropertyStatus::satisfied_witness);
        } else {
            CHECK(verdict.status == FPropertyStatus::refuted_certified);
        }
    }
}

TEST_CASE("monotone eta certificates") {
    auto gauss = catalog_build<LogFloat>("NAT-GAUSS");
    std::vector<Element> T;
    for (int t = 1; t <= 5; ++t) T.push_back(Element::nat(t));
    auto cert = monotone_eta_certificate<LogFloat>(gauss.weight, *gauss.semigroup, T, 20,
                                                   EtaDirection::decreasing);
    CHECK(cert.clean());
    CHECK(cert.checked_window == 20);

    auto wrong = monotone_eta_certificate<LogFloat>(gauss.weight, *gauss.semigroup, T, 20,
                                                    EtaDirection::increasing);
    CHECK_FALSE(wrong.clean());
    CHECK(wrong.violations.front().t == Element::nat(1));

    auto qgauss = catalog_build<LogFloat>("QPOS-GAUSS");
    std::vector<Element> Tq = {Element::fraction(1, 2), Element::nat(1), Element::nat(2)};
    CHECK(monotone_eta_certificate<LogFloat>(qgauss.weight, *qgauss.semigroup, Tq, 12, EtaDirection::decreasing)
              .clean());

    // constant eta is monotone in both directions
    auto unit = catalog_build<Rational>("NMIN-UNIT");
    std::vector<Element> Tu = {Element::nat(1), Element::nat(2)};
    CHECK(monotone_eta_certificate<Rational>(unit.weight, *unit.semigroup, Tu, 10, EtaDirection::increasing)
              .clean());
    CHECK(monotone_eta_certificate<Rational>(unit.weight, *unit.semigroup, Tu, 10, EtaDirection::decreasing)
              .clean());
}

TEST_CASE("monotone certificate preconditions") {
    auto unordered = make_cayley("min2", {{1, 1}, {1, 2}});
    Weight<Rational> w("1", [](const Element&) { return Rational(1); });
    CHECK_THROWS_AS(
        monotone_eta_certificate<Rational>(w, *unordered, {Element::nat(1)}, 2, EtaDirection::decreasing),
        UnsupportedQuery);

    // ordered but incompatible: the swap-projection table
    auto swap = make_cayley("swap", {{2, 1}, {2, 1}}, true);
    CHECK_THROWS_AS(
        monotone_eta_certificate<Rational>(w, *swap, {Element::nat(1)}, 2, EtaDirection::decreasing),
        UnsupportedQuery);
}

TEST_CASE("corollary consistency: clean certificates imply findable witnesses") {
    auto gauss = catalog_build<LogFloat>("NAT-GAUSS");
    std::vector<Element> T = {Element::nat(1), Element::nat(2), Element::nat(3)};
    auto cert = monotone_eta_certificate<LogFloat>(gauss.weight, *gauss.semigroup, T, 20,
                                                   EtaDirection::decreasing);
    REQUIRE(cert.clean());
    for (const Rational& r : {Rational(1, 2), Rational(3, 4), Rational(9, 10)}) {
        for (std::size_t take = 1; take <= T.size(); ++take) {
            std::vector<Element> sub(T.begin(), T.begin() + long(take));
            auto verdict = fproperty_search<LogFloat>(gauss.weight, *gauss.semigroup, {sub, r, 20});
            CHECK(verdict.status == FPropertyStatus::satisfied_witness);
        }
    }
}

TEST_CASE("limsup probing along 1/k") {
    auto qgauss = catalog_build<LogFloat>("QPOS-GAUSS");
    auto report = limsup_certificate<LogFloat>(qgauss.weight, *qgauss.semigroup, Element::nat(1), 50);
    // ratios e^(-1-2/k) climb toward e^(-1) but never reach it
    CHECK(report.running_max.log_magnitude() == doctest::Approx(-1.0 - 2.0 / 50.0));
    CHECK_FALSE(report.reached);
    for (std::size_t i = 1; i < report.ratios.size(); ++i)
        CHECK(report.ratios[i - 1].second < report.ratios[i].second);

    auto denom = catalog_build<Rational>("QPOS-DENOM");
    auto r2 = limsup_certificate<Rational>(denom.weight, *denom.semigroup, Element::fraction(2, 3), 7);
    CHECK(r2.running_max == Rational(3)); // exactly den at 1/5 (and any prime past 3)
    CHECK(r2.reached);

    Weight<Rational> unit("1", [](const Element&) { return Rational(1); });
    auto r3 = limsup_certificate<Rational>(unit, *make_qpos_add(), Element::fraction(3, 2), 1);
    CHECK(r3.running_max == Rational(1)); // constant ratio hits w(s) immediately
    CHECK(r3.reached);

    auto w = constant_weight_with_closed_form();
    auto add = make_nat_add();
    CHECK_THROWS_AS(limsup_certificate<Rational>(w, *add, Element::nat(1), 5), UnsupportedQuery);
}

TEST_CASE("regularity verdicts across the catalog") {
    auto qgauss = catalog_build<LogFloat>("QPOS-GAUSS");
    CHECK(regularity_verdict<LogFloat>(qgauss.weight, *qgauss.semigroup, qgauss.regularity).status ==
          RegularityStatus::regular_certified);

    auto gauss = catalog_build<LogFloat>("NAT-GAUSS");
    auto not_regular = regularity_verdict<LogFloat>(gauss.weight, *gauss.semigroup, gauss.regularity);
    CHECK(not_regular.status == RegularityStatus::not_regular_certified);
    CHECK(not_regular.evidence.front().find("t=1") != std::string::npos);

    auto unit = catalog_build<Rational>("NMIN-UNIT");
    CHECK(regularity_verdict<Rational>(unit.weight, *unit.semigroup, unit.regularity).status ==
          RegularityStatus::regular_certified);

    auto denom = catalog_build<Rational>("QPOS-DENOM");
    CHECK(regularity_verdict<Rational>(denom.weight, *denom.semigroup, denom.regularity).status ==
          RegularityStatus::unknown);

    auto bare = weight_from_expr<Rational>(parse_weight_expr("den", ElementKind::fraction), "bare");
    RegularityConfig cfg;
    CHECK(regularity_verdict<Rational>(bare, *make_qpos_add(), cfg).status == RegularityStatus::unknown);
}
