#pragma once

#include <cmath>
#include <cstdint>

#ifndef __SIZEOF_INT128__
#error "this project requires a compiler with 128-bit integer support"
#endif

namespace wythoff {

using u128 = unsigned __int128;

// floor(sqrt(v)) for 128-bit arguments.
//
// The hardware sqrt only seeds the search; the two correction loops enforce
// r*r <= v < (r+1)*(r+1) with pure integer comparisons, so the result is
// exact for every input regardless of floating-point rounding.
inline std::uint64_t isqrt(u128 v) {
    if (v == 0) {
        return 0;
    }
    const long double approx = std::sqrt(static_cast<long double>(v));
    std::uint64_t r;
    if (approx >= 18446744073709551616.0L) {
        r = UINT64_MAX;
    } else {
        r = static_cast<std::uint64_t>(approx);
    }
    while (static_cast<u128>(r) * r > v) {
        --r;
    }
    while (r != UINT64_MAX && static_cast<u128>(r + 1) * (r + 1) <= v) {
        ++r;
    }
    return r;
}

}  // namespace wythoff
