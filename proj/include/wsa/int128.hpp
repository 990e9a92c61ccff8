#pragma once

#include "wsa/errors.hpp"

#include <cstdint>
#include <string>

namespace wsa {

using int128 = __int128;
using uint128 = unsigned __int128;

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("exact arithmetic overflow in addition; rerun in log mode");
    return r;
}

inline int128 checked_sub(int128 a, int128 b) {
    int128 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("exact arithmetic overflow in subtraction; rerun in log mode");
    return r;
}

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("exact arithmetic overflow in multiplication; rerun in log mode");
    return r;
}

inline uint128 uabs128(int128 v) {
    return v < 0 ? uint128(0) - uint128(v) : uint128(v);
}

inline uint128 gcd128(uint128 a, uint128 b) {
    while (b != 0) {
        uint128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::string to_string_int128(int128 v);
double to_double_int128(int128 v);

} // namespace wsa
