#include "wsa/element.hpp"

#include "wsa/errors.hpp"

#include <numeric>
#include <ostream>

namespace wsa {

Element Element::nat(std::int64_t n) {
    if (n < 1) throw EncodingError("natural element must be >= 1, got " + std::to_string(n));
    return Element(n, 1);
}

Element Element::fraction(std::int64_t num, std::int64_t den) {
    if (num < 1 || den < 1)
        throw EncodingError("fraction element must have positive parts, got " + std::to_string(num) + "/" +
                            std::to_string(den));
    std::int64_t g = std::gcd(num, den);
    return Element(num / g, den / g);
}

Element Element::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return nat(std::stoll(text));
        return fraction(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw EncodingError("cannot parse element '" + text + "'");
    }
}

std::string Element::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Element& e) {
    return os << e.str();
}

} // namespace wsa
