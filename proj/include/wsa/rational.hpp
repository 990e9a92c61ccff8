#pragma once

#include "wsa/int128.hpp"

#include <cstdint>
#include <span>
#include <string>

namespace wsa {

/// Arbitrary-sign rational over checked 128-bit integers. Always stored
/// reduced with a positive denominator; any operation that would exceed the
/// 128-bit headroom throws OverflowError with a switch-to-log-mode advisory.
class Rational {
public:
    static constexpr bool is_exact = true;

    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {} // NOLINT: implicit by design
    Rational(int128 num, int128 den) : num_(num), den_(den) { normalize(); }

    static Rational from_ratio(long long num, long long den) { return Rational(num, den); }
    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }

    /// Accepts "34", "-5", "51/100", "0.51".
    static Rational parse(const std::string& text);

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational abs() const { return num_ < 0 ? Rational(-num_, den_, already_reduced_tag{}) : *this; }
    Rational operator-() const { return Rational(-num_, den_, already_reduced_tag{}); }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const { return *this + (-o); }
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    /// Overflow-proof three-way comparison (never multiplies cross terms).
    int compare(const Rational& o) const;
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return compare(o) < 0; }
    bool operator<=(const Rational& o) const { return compare(o) <= 0; }
    bool operator>(const Rational& o) const { return compare(o) > 0; }
    bool operator>=(const Rational& o) const { return compare(o) >= 0; }

    Rational pow_int(long long e) const;

    /// Plain fold; exact addition needs no stabilization.
    static Rational sum(std::span<const Rational> terms);

    double to_double() const { return to_double_int128(num_) / to_double_int128(den_); }
    /// "34", "-5", "51/100".
    std::string str() const;

private:
    struct already_reduced_tag {};
    Rational(int128 num, int128 den, already_reduced_tag) : num_(num), den_(den) {}
    void normalize();

    int128 num_;
    int128 den_;
};

} // namespace wsa
