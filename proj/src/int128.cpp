#include "wsa/int128.hpp"

#include <algorithm>

namespace wsa {

std::string to_string_int128(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    uint128 u = uabs128(v);
    std::string out;
    while (u != 0) {
        out.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

double to_double_int128(int128 v) {
    return static_cast<double>(v);
}

} // namespace wsa
