#pragma once

#include "wsa/errors.hpp"

#include <cmath>
#include <span>
#include <string>

namespace wsa {

/// Signed scalar stored as {sign, log-magnitude}. Survives magnitudes like
/// e^(-n^2) far beyond double range; additions go through log-sum-exp so the
/// largest term factors out before any exponential is formed.
class LogFloat {
public:
    static constexpr bool is_exact = false;

    LogFloat() : sign_(0), lg_(0.0) {}
    LogFloat(long long v) { *this = from_ratio(v, 1); } // NOLINT: implicit by design

    static LogFloat zero() { return LogFloat(); }
    static LogFloat one() { return from_log(0.0); }

    /// Positive value with the given natural log.
    static LogFloat from_log(double lg) {
        LogFloat r;
        if (!std::isfinite(lg)) throw DomainError("non-finite log magnitude");
        r.sign_ = 1;
        r.lg_ = lg;
        return r;
    }

    static LogFloat from_ratio(long long num, long long den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        if (num == 0) return zero();
        LogFloat r;
        r.sign_ = ((num < 0) != (den < 0)) ? -1 : 1;
        r.lg_ = std::log(std::abs(static_cast<double>(num))) - std::log(std::abs(static_cast<double>(den)));
        return r;
    }

    static LogFloat from_double(double v) {
        if (!std::isfinite(v)) throw DomainError("non-finite value");
        if (v == 0.0) return zero();
        LogFloat r;
        r.sign_ = v < 0 ? -1 : 1;
        r.lg_ = std::log(std::abs(v));
        return r;
    }

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }

    /// Natural log of the magnitude; caller must ensure the value is nonzero.
    double log_magnitude() const {
        if (sign_ == 0) throw DomainError("log of zero");
        return lg_;
    }

    LogFloat abs() const {
        LogFloat r = *this;
        if (r.sign_ != 0) r.sign_ = 1;
        return r;
    }

    LogFloat operator-() const {
        LogFloat r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    LogFloat operator*(const LogFloat& o) const {
        if (sign_ == 0 || o.sign_ == 0) return zero();
        LogFloat r;
        r.sign_ = sign_ * o.sign_;
        r.lg_ = lg_ + o.lg_;
        return r;
    }

    LogFloat operator/(const LogFloat& o) const {
        if (o.sign_ == 0) throw DomainError("division by zero");
        if (sign_ == 0) return zero();
        LogFloat r;
        r.sign_ = sign_ * o.sign_;
        r.lg_ = lg_ - o.lg_;
        return r;
    }

    LogFloat operator+(const LogFloat& o) const {
        if (sign_ == 0) return o;
        if (o.sign_ == 0) return *this;
        double hi = std::max(lg_, o.lg_);
        double lo = std::min(lg_, o.lg_);
        if (sign_ == o.sign_) {
            LogFloat r;
            r.sign_ = sign_;
            r.lg_ = hi + std::log1p(std::exp(lo - hi));
            return r;
        }
        if (lg_ == o.lg_) return zero(); // exact cancellation
        LogFloat r;
        r.sign_ = (lg_ > o.lg_) ? sign_ : o.sign_;
        r.lg_ = hi + std::log(-std::expm1(lo - hi));
        return r;
    }

    LogFloat operator-(const LogFloat& o) const { return *this + (-o); }
    LogFloat& operator+=(const LogFloat& o) { return *this = *this + o; }
    LogFloat& operator-=(const LogFloat& o) { return *this = *this - o; }
    LogFloat& operator*=(const LogFloat& o) { return *this = *this * o; }
    LogFloat& operator/=(const LogFloat& o) { return *this = *this / o; }

    int compare(const LogFloat& o) const {
        if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
        if (sign_ == 0) return 0;
        if (lg_ == o.lg_) return 0;
        int mag = lg_ < o.lg_ ? -1 : 1;
        return sign_ > 0 ? mag : -mag;
    }
    bool operator==(const LogFloat& o) const { return compare(o) == 0; }
    bool operator!=(const LogFloat& o) const { return compare(o) != 0; }
    bool operator<(const LogFloat& o) const { return compare(o) < 0; }
    bool operator<=(const LogFloat& o) const { return compare(o) <= 0; }
    bool operator>(const LogFloat& o) const { return compare(o) > 0; }
    bool operator>=(const LogFloat& o) const { return compare(o) >= 0; }

    LogFloat pow_int(long long e) const {
        if (sign_ == 0) {
            if (e <= 0) throw DomainError("zero to a non-positive power");
            return zero();
        }
        LogFloat r;
        r.sign_ = (sign_ < 0 && (e % 2 != 0)) ? -1 : 1;
        r.lg_ = lg_ * static_cast<double>(e);
        return r;
    }

    /// k-th root of a positive value.
    LogFloat root(int k) const {
        if (sign_ == 0) return zero();
        if (sign_ < 0) throw DomainError("root of a negative value");
        LogFloat r;
        r.sign_ = 1;
        r.lg_ = lg_ / k;
        return r;
    }

    /// sqrt(a^2 + b^2) computed fully in the log domain.
    static LogFloat hypot(const LogFloat& a, const LogFloat& b) {
        if (a.sign_ == 0) return b.abs();
        if (b.sign_ == 0) return a.abs();
        double x = 2.0 * a.lg_, y = 2.0 * b.lg_;
        double hi = std::max(x, y), lo = std::min(x, y);
        return from_log(0.5 * (hi + std::log1p(std::exp(lo - hi))));
    }

    /// Signed batch sum; positive and negative terms are each folded with a
    /// max-factored log-sum-exp before the single cancelling subtraction.
    static LogFloat sum(std::span<const LogFloat> terms);

    double to_double() const {
        if (sign_ == 0) return 0.0;
        return sign_ * std::exp(lg_);
    }

    /// Base-10 scientific string built from the log, e.g. "3.354626279e-4".
    std::string str() const;

private:
    int sign_;
    double lg_;
};

} // namespace wsa
