#include "wsa/rational.hpp"

#include "wsa/errors.hpp"

#include <cctype>

namespace wsa {

void Rational::normalize() {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    uint128 g = gcd128(uabs128(num_), uint128(den_));
    if (g > 1) {
        num_ = (num_ < 0) ? -int128(uabs128(num_) / g) : int128(uint128(num_) / g);
        den_ = int128(uint128(den_) / g);
    }
}

Rational Rational::operator+(const Rational& o) const {
    // Cross-reduce by gcd(b, d) before multiplying to delay overflow.
    uint128 g = gcd128(uint128(den_), uint128(o.den_));
    int128 b1 = den_ / int128(g);
    int128 d1 = o.den_ / int128(g);
    int128 num = checked_add(checked_mul(num_, d1), checked_mul(o.num_, b1));
    int128 den = checked_mul(den_, d1);
    return Rational(num, den);
}

Rational Rational::operator*(const Rational& o) const {
    uint128 g1 = gcd128(uabs128(num_), uint128(o.den_));
    uint128 g2 = gcd128(uabs128(o.num_), uint128(den_));
    int128 a = num_ / int128(g1);
    int128 c = o.num_ / int128(g2);
    int128 b = den_ / int128(g2);
    int128 d = o.den_ / int128(g1);
    return Rational(checked_mul(a, c), checked_mul(b, d));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw DomainError("division by zero");
    int128 n = o.num_ < 0 ? -o.den_ : o.den_;
    int128 d = o.num_ < 0 ? -o.num_ : o.num_;
    return *this * Rational(n, d, already_reduced_tag{});
}

int Rational::compare(const Rational& o) const {
    int sa = sign(), sb = o.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    // Same nonzero sign: continued-fraction descent on the magnitudes, so no
    // cross product is ever formed and comparisons cannot overflow.
    int128 a = int128(uabs128(num_)), b = den_;
    int128 c = int128(uabs128(o.num_)), d = o.den_;
    int flip = sa; // for negatives a larger magnitude means a smaller value
    for (;;) {
        int128 q1 = a / b, r1 = a % b;
        int128 q2 = c / d, r2 = c % d;
        if (q1 != q2) return (q1 < q2 ? -1 : 1) * flip;
        if (r1 == 0 && r2 == 0) return 0;
        if (r1 == 0) return -flip;
        if (r2 == 0) return flip;
        // fractional parts r1/b vs r2/d: invert both and flip the verdict
        a = b;
        b = r1;
        int128 t = d;
        d = r2;
        c = t;
        flip = -flip;
    }
}

Rational Rational::pow_int(long long e) const {
    if (e < 0) {
        if (num_ == 0) throw DomainError("zero to a negative power");
        Rational inv = one() / *this;
        return inv.pow_int(-e);
    }
    Rational result = one();
    Rational base = *this;
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n > 0) {
        if (n & 1ULL) result = result * base;
        n >>= 1ULL;
        if (n > 0) base = base * base;
    }
    return result;
}

Rational Rational::sum(std::span<const Rational> terms) {
    Rational acc = zero();
    for (const Rational& t : terms) acc += t;
    return acc;
}

std::string Rational::str() const {
    if (den_ == 1) return to_string_int128(num_);
    return to_string_int128(num_) + "/" + to_string_int128(den_);
}

Rational Rational::parse(const std::string& text) {
    std::size_t i = 0;
    auto fail = [&](const char* msg) -> Rational { throw ParseError(std::string(msg) + " in '" + text + "'", i); };
    if (text.empty()) return fail("empty number");
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    auto read_digits = [&](int128& out) -> bool {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return false;
        out = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            out = checked_add(checked_mul(out, 10), text[i] - '0');
            ++i;
        }
        return true;
    };
    int128 whole = 0;
    if (!read_digits(whole)) return fail("expected digits");
    int128 num = whole, den = 1;
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            num = checked_add(checked_mul(num, 10), text[i] - '0');
            den = checked_mul(den, 10);
            ++i;
        }
    } else if (i < text.size() && text[i] == '/') {
        ++i;
        if (!read_digits(den)) return fail("expected denominator digits");
        if (den == 0) return fail("zero denominator");
    }
    if (i != text.size()) return fail("trailing characters");
    Rational r(num, den);
    return neg ? -r : r;
}

} // namespace wsa
