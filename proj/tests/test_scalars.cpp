#include "wsa/scalar.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace wsa;

TEST_CASE("rational arithmetic stays reduced") {
    Rational half(1, 2);
    Rational fifth(1, 5);
    CHECK((half + fifth).str() == "7/10");
    CHECK((half * fifth).str() == "1/10");
    CHECK((half - half).str() == "0");
    CHECK((Rational(4) / Rational(6)).str() == "2/3");
    CHECK(Rational(-3, -6).str() == "1/2");
    CHECK(Rational(3, -6).str() == "-1/2");
}

TEST_CASE("rational parse round-trips") {
    CHECK(Rational::parse("34").str() == "34");
    CHECK(Rational::parse("51/100").str() == "51/100");
    CHECK(Rational::parse("0.51").str() == "51/100");
    CHECK(Rational::parse("-1/2").str() == "-1/2");
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
}

TEST_CASE("rational comparison never overflows") {
    // magnitudes near 4^40 would overflow a cross multiplication
    Rational big1 = Rational(4).pow_int(40) + Rational(1, 3);
    Rational big2 = Rational(4).pow_int(40) + Rational(1, 2);
    CHECK(big1 < big2);
    CHECK(big2 > big1);
    CHECK(big1 == big1);
    CHECK((-big1) > (-big2));
}

TEST_CASE("rational overflow raises the advisory error") {
    Rational big = Rational(2).pow_int(100);
    CHECK_THROWS_AS(big * big, OverflowError);
    CHECK_THROWS_AS(Rational(2).pow_int(200), OverflowError);
}

TEST_CASE("rational ordering is total on random values") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> d(-300, 300);
    std::uniform_int_distribution<long long> e(1, 60);
    for (int i = 0; i < 500; ++i) {
        Rational a(d(rng), e(rng));
        Rational b(d(rng), e(rng));
        double fa = a.to_double(), fb = b.to_double();
        if (fa < fb - 1e-9) CHECK(a < b);
        if (fa > fb + 1e-9) CHECK(a > b);
        CHECK(((a < b) + (a == b) + (b < a)) == 1);
    }
}

TEST_CASE("logfloat survives magnitudes beyond double range") {
    LogFloat tiny = LogFloat::from_log(-1e6); // e^(-1e6), unrepresentable as a double
    LogFloat tiny2 = tiny * tiny;
    CHECK(tiny2.log_magnitude() == doctest::Approx(-2e6));
    CHECK(tiny2 < tiny);
    CHECK((tiny / tiny2).log_magnitude() == doctest::Approx(1e6));
}

TEST_CASE("logfloat signed addition agrees with doubles") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> d(-50.0, 50.0);
    for (int i = 0; i < 500; ++i) {
        double a = d(rng), b = d(rng);
        LogFloat la = LogFloat::from_double(a), lb = LogFloat::from_double(b);
        CHECK((la + lb).to_double() == doctest::Approx(a + b).epsilon(1e-12));
        CHECK((la * lb).to_double() == doctest::Approx(a * b).epsilon(1e-12));
        CHECK((la - lb).to_double() == doctest::Approx(a - b).epsilon(1e-9));
    }
}

TEST_CASE("logfloat sum factors the max out") {
    std::vector<LogFloat> terms;
    for (int i = 0; i < 100; ++i) terms.push_back(LogFloat::from_log(-900.0 - i));
    LogFloat total = LogFloat::sum(terms);
    // sum of e^(-900-i) = e^-900 * (1-e^-100)/(1-e^-1)
    double expect = -900.0 + std::log((1.0 - std::exp(-100.0)) / (1.0 - std::exp(-1.0)));
    CHECK(total.log_magnitude() == doctest::Approx(expect).epsilon(1e-12));
    CHECK(LogFloat::sum(std::vector<LogFloat>{}).is_zero());
}

TEST_CASE("logfloat exact cancellation yields zero") {
    LogFloat a = LogFloat::from_ratio(3, 7);
    CHECK((a - a).is_zero());
    CHECK((a + (-a)).is_zero());
}

TEST_CASE("exact and log evaluations of rational values agree") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long long> d(1, 500);
    for (int i = 0; i < 200; ++i) {
        long long p = d(rng), q = d(rng);
        Rational r(p, q);
        LogFloat l = to_logfloat(r);
        CHECK(l.to_double() == doctest::Approx(r.to_double()).epsilon(1e-9));
    }
}

TEST_CASE("approx comparisons honor the mode") {
    CHECK(approx_eq(Rational(1, 3), Rational(1, 3), 1e-9));
    CHECK_FALSE(approx_eq(Rational(1, 3), Rational(1, 3) + Rational(1, 1000000000000LL), 1e-9));
    LogFloat a = LogFloat::from_log(-5.0);
    LogFloat b = LogFloat::from_log(-5.0 + 1e-12);
    CHECK(approx_eq(a, b, 1e-9));
    CHECK(exceeds(LogFloat::from_log(-4.0), a, 1e-9));
    CHECK_FALSE(exceeds(b, a, 1e-9));
}
