#pragma once

#include <cstdint>
#include <vector>

#include "wythoff/rules.hpp"

namespace wythoff {

// Closed-form generators and membership tests for the P-position families:
// the classical Wythoff pairs (lower(n), upper(n)), the variant pairs
// (b1(n), b2(n)) with their swaps plus {(0,0),(1,1)}, the misère set, the
// sum-game set, and the literal 7x7-corner sets A, B, C.
//
// All membership tests run in O(1) arithmetic by indexing on the coordinate
// difference; the verification sweeps call them O(N^2) times.

// b1(n) = lower(n) + g(n) - 1, b2(n) = upper(n) + g(n).
// b2(n) - b1(n) == n + 1 for every n.
std::uint64_t b1(std::uint64_t n);
std::uint64_t b2(std::uint64_t n);

// Classical Wythoff P-positions: sorted coordinates (s, t) with
// s == lower(t - s).
bool p0_contains(Position p);

// Variant P-positions: {(0,0), (1,1)} plus sorted (s, t) with
// s == b1(n) and t == b2(n) for n = t - s - 1.
bool p1_contains(Position p);

// Misère-variant P-positions: the literal set B inside the 7x7 corner,
// the classical Wythoff set everywhere x >= 8 or y >= 8.
bool p2_contains(Position p);

// Sum-game P-positions: z == 1 defers to the misère set, z == 0 to the
// variant set.
bool p4_contains(const SumPosition& p);

// The literal small-board sets (8, 7, and 7 positions).
const std::vector<Position>& set_a();
const std::vector<Position>& set_b();
const std::vector<Position>& set_c();

// A* = A x {z=0}, B* = B x {z=1}.
std::vector<SumPosition> set_a_star();
std::vector<SumPosition> set_b_star();

enum class PairFamily : std::uint8_t {
    P01,  // (lower(n), upper(n))
    P02,  // (upper(n), lower(n))
    P11,  // (b1(n), b2(n))
    P12,  // (b2(n), b1(n))
};

struct PPairIndexed {
    std::uint64_t n = 0;
    std::uint64_t first = 0;
    std::uint64_t second = 0;
    PairFamily family = PairFamily::P01;

    friend bool operator==(const PPairIndexed&, const PPairIndexed&) = default;
};

// All pairs of the family with both coordinates <= bound, ascending in n.
// The swapped families skip their symmetric pairs (only (0,0) in P02), so a
// family union never lists the same position twice.
std::vector<PPairIndexed> enumerate(PairFamily family, std::uint64_t bound);

}  // namespace wythoff
