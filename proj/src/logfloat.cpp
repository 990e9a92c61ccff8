#include "wsa/logfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace wsa {

namespace {

// log(sum exp(lgs)) with the largest term factored out.
double log_sum_exp(const std::vector<double>& lgs) {
    double hi = *std::max_element(lgs.begin(), lgs.end());
    double acc = 0.0;
    for (double v : lgs) acc += std::exp(v - hi);
    return hi + std::log(acc);
}

} // namespace

LogFloat LogFloat::sum(std::span<const LogFloat> terms) {
    std::vector<double> pos, neg;
    for (const LogFloat& t : terms) {
        if (t.sign() > 0) pos.push_back(t.log_magnitude());
        else if (t.sign() < 0) neg.push_back(t.log_magnitude());
    }
    LogFloat p = pos.empty() ? zero() : from_log(log_sum_exp(pos));
    LogFloat n = neg.empty() ? zero() : from_log(log_sum_exp(neg));
    return p - n;
}

std::string LogFloat::str() const {
    if (sign_ == 0) return "0";
    double d = lg_ / std::log(10.0);
    double e = std::floor(d);
    double mant = std::pow(10.0, d - e);
    // guard against mantissa rounding to 10
    if (mant >= 10.0) {
        mant /= 10.0;
        e += 1.0;
    }
    char buf[64];
    if (e >= -4 && e <= 15) {
        std::snprintf(buf, sizeof buf, "%.12g", sign_ * mant * std::pow(10.0, e));
    } else {
        std::snprintf(buf, sizeof buf, "%s%.9fe%+d", sign_ < 0 ? "-" : "", mant, static_cast<int>(e));
    }
    return buf;
}

} // namespace wsa
