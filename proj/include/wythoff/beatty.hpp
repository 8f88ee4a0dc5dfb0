#pragma once

#include <cstdint>
#include <optional>

namespace wythoff {

// Exact integer evaluation of the lower and upper Wythoff sequences,
// floor(n*phi) and floor(n*(phi+1)) with phi = (1+sqrt(5))/2.
//
// floor(n*phi) is computed as floor((n + isqrt(5*n^2)) / 2), which is exact
// because sqrt(5*n^2) is irrational for n > 0. No floating point appears
// anywhere in a result path.

// Largest index accepted by lower_wythoff / upper_wythoff / floor_div_phi:
// upper_wythoff(kIndexMax) == 2^64 - 1 exactly, one more would overflow.
inline constexpr std::uint64_t kIndexMax = 7046029254386353130ULL;

// Largest v with 5*v^2 representable in 128 bits; the domain of the
// upper-sequence membership test.
inline constexpr std::uint64_t kSqrtArgMax = 8249634742471189717ULL;

// Largest index accepted by classify_triple: the membership test it runs
// on lower_wythoff(n) - 1 must stay within kSqrtArgMax.
inline constexpr std::uint64_t kTripleIndexMax = 5098554665619180950ULL;

// floor(n * phi). Throws std::out_of_range for n > kIndexMax.
std::uint64_t lower_wythoff(std::uint64_t n);

// floor(n * (phi + 1)) == lower_wythoff(n) + n.
std::uint64_t upper_wythoff(std::uint64_t n);

// floor(n / phi) == lower_wythoff(n) - n, since 1/phi == phi - 1.
std::uint64_t floor_div_phi(std::uint64_t n);

// The index m with upper_wythoff(m) == v, or nullopt when v is not an
// upper-sequence member. Throws std::out_of_range for v > kSqrtArgMax.
std::optional<std::uint64_t> upper_index_of(std::uint64_t v);

enum class TripleCase : std::uint8_t {
    UpperFirst,   // upper(m), lower(n-1), lower(n) are three consecutive integers
    UpperMiddle,  // lower(n-1), upper(m), lower(n) are three consecutive integers
};

// Which of the two consecutive-triple patterns ends at lower_wythoff(n),
// together with the witness index m. Exactly one pattern applies for every
// n >= 2. For n == 1 the result is the degenerate UpperMiddle with m == 0:
// upper(0) == lower(1) - 1 still holds, but the three values 0, 0, 1 do not
// form a run. Downstream consumers only rely on the upper(m) == lower(n) - 1
// equation, which is valid for all n >= 1.
struct ConsecutiveTriple {
    TripleCase tag;
    std::uint64_t n;
    std::uint64_t m;
};

// Throws std::domain_error for n == 0 (no predecessor) and
// std::out_of_range for n > kTripleIndexMax.
ConsecutiveTriple classify_triple(std::uint64_t n);

}  // namespace wythoff
