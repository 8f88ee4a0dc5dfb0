#include "wythoff/beatty.hpp"

#include <stdexcept>
#include <string>

#include "wythoff/intmath.hpp"

namespace wythoff {

namespace {

[[noreturn]] void throw_index_error(const char* fn, std::uint64_t n, std::uint64_t max) {
    throw std::out_of_range(std::string(fn) + ": index " + std::to_string(n) +
                            " exceeds exact-arithmetic bound " + std::to_string(max));
}

}  // namespace

std::uint64_t lower_wythoff(std::uint64_t n) {
    if (n > kIndexMax) {
        throw_index_error("lower_wythoff", n, kIndexMax);
    }
    const std::uint64_t s = isqrt(u128{5} * n * n);  // floor(n * sqrt(5))
    return static_cast<std::uint64_t>((u128{n} + s) >> 1);
}

std::uint64_t upper_wythoff(std::uint64_t n) {
    if (n > kIndexMax) {
        throw_index_error("upper_wythoff", n, kIndexMax);
    }
    return lower_wythoff(n) + n;
}

std::uint64_t floor_div_phi(std::uint64_t n) {
    if (n > kIndexMax) {
        throw_index_error("floor_div_phi", n, kIndexMax);
    }
    return lower_wythoff(n) - n;
}

std::optional<std::uint64_t> upper_index_of(std::uint64_t v) {
    if (v == 0) {
        return 0;
    }
    if (v > kSqrtArgMax) {
        throw_index_error("upper_index_of", v, kSqrtArgMax);
    }
    // upper(m) == v forces m into [v/(phi+1), (v+1)/(phi+1)), a window of
    // width 1/(phi+1) < 1 holding at most one integer, and the left endpoint
    // is irrational for v >= 1, so the candidate is ceil(v/(phi+1)). With
    // s = floor(v*sqrt(5)): floor(v/(phi+1)) = floor(v*(3-sqrt(5))/2)
    //                                        = floor((3v - s - 1) / 2).
    const std::uint64_t s = isqrt(u128{5} * v * v);
    const std::uint64_t m = static_cast<std::uint64_t>((u128{3} * v - s - 1) >> 1) + 1;
    if (upper_wythoff(m) == v) {
        return m;
    }
    return std::nullopt;
}

ConsecutiveTriple classify_triple(std::uint64_t n) {
    if (n == 0) {
        throw std::domain_error("classify_triple: n must be >= 1");
    }
    if (n > kTripleIndexMax) {
        throw_index_error("classify_triple", n, kTripleIndexMax);
    }
    const std::uint64_t v = lower_wythoff(n) - 1;
    if (auto m = upper_index_of(v)) {
        return {TripleCase::UpperMiddle, n, *m};
    }
    // lower(n) - 1 is not an upper member, so the gap below lower(n) is 1 and
    // lower(n) - 2 must be one (complementarity leaves no third option).
    auto m = upper_index_of(v - 1);
    if (!m) {
        throw std::logic_error("classify_triple: no witness found (arithmetic bug)");
    }
    return {TripleCase::UpperFirst, n, *m};
}

}  // namespace wythoff
