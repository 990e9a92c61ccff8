#pragma once

#include "wsa/int128.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace wsa {

/// Canonical element token: a positive integer (den == 1) or a reduced
/// positive fraction. Encoding equality is element equality.
class Element {
public:
    Element() : num_(1), den_(1) {}
    static Element nat(std::int64_t n);
    static Element fraction(std::int64_t num, std::int64_t den);

    /// Accepts "7" or "7/10"; the fraction is reduced on the way in.
    static Element parse(const std::string& text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_natural() const { return den_ == 1; }

    /// Ascending numeric value, denominator as tie-break.
    int compare(const Element& o) const {
        int128 lhs = int128(num_) * o.den_;
        int128 rhs = int128(o.num_) * den_;
        if (lhs != rhs) return lhs < rhs ? -1 : 1;
        if (den_ != o.den_) return den_ < o.den_ ? -1 : 1;
        return 0;
    }
    bool operator==(const Element& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Element& o) const { return !(*this == o); }
    bool operator<(const Element& o) const { return compare(o) < 0; }

    std::string str() const;

private:
    Element(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}

    std::int64_t num_;
    std::int64_t den_;
};

struct ElementLess {
    bool operator()(const Element& a, const Element& b) const { return a < b; }
};

std::ostream& operator<<(std::ostream& os, const Element& e);

} // namespace wsa
