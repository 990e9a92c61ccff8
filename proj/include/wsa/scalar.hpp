#pragma once

#include "wsa/logfloat.hpp"
#include "wsa/rational.hpp"

#include <cmath>
#include <concepts>
#include <string>

namespace wsa {

/// Numeric mode: exact rationals or signed log-domain floats. Both expose the
/// same surface so every algorithm is written once.
template <class S>
concept ScalarMode = requires(S a, S b, long long i) {
    { S::is_exact } -> std::convertible_to<bool>;
    { S::zero() } -> std::same_as<S>;
    { S::one() } -> std::same_as<S>;
    { S::from_ratio(i, i) } -> std::same_as<S>;
    { a + b } -> std::same_as<S>;
    { a - b } -> std::same_as<S>;
    { a* b } -> std::same_as<S>;
    { a / b } -> std::same_as<S>;
    { -a } -> std::same_as<S>;
    { a.abs() } -> std::same_as<S>;
    { a.pow_int(i) } -> std::same_as<S>;
    { a.compare(b) } -> std::same_as<int>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.sign() } -> std::same_as<int>;
    { a.to_double() } -> std::same_as<double>;
    { a.str() } -> std::same_as<std::string>;
};

static_assert(ScalarMode<Rational>);
static_assert(ScalarMode<LogFloat>);

inline LogFloat to_logfloat(const Rational& r) {
    if (r.is_zero()) return LogFloat::zero();
    LogFloat v = LogFloat::from_log(std::log(to_double_int128(r.num() < 0 ? -r.num() : r.num())) -
                                    std::log(to_double_int128(r.den())));
    return r.sign() < 0 ? -v : v;
}

template <ScalarMode S>
S scalar_from_rational(const Rational& r) {
    if constexpr (S::is_exact) return r;
    else return to_logfloat(r);
}

template <ScalarMode S>
S parse_scalar(const std::string& text) {
    return scalar_from_rational<S>(Rational::parse(text));
}

/// a == b up to the mode tolerance (relative in log mode, exact otherwise).
template <ScalarMode S>
bool approx_eq(const S& a, const S& b, double rtol) {
    if constexpr (S::is_exact) {
        (void)rtol;
        return a == b;
    } else {
        if (a.compare(b) == 0) return true;
        if (a.sign() != b.sign() || a.sign() == 0) return false;
        return std::abs(a.log_magnitude() - b.log_magnitude()) <= rtol;
    }
}

/// a <= b up to the mode tolerance.
template <ScalarMode S>
bool approx_le(const S& a, const S& b, double rtol) {
    return a.compare(b) <= 0 || approx_eq(a, b, rtol);
}

/// Strict violation test: a > b beyond the mode tolerance.
template <ScalarMode S>
bool exceeds(const S& a, const S& b, double rtol) {
    return !approx_le(a, b, rtol);
}

/// Default relative tolerance for log mode; exact mode ignores it.
inline constexpr double kDefaultTolerance = 1e-9;

} // namespace wsa
