#pragma once

// Test-only reference implementations, deliberately independent of the
// library's arithmetic: the pair generator uses mex over previously used
// values, the board solvers materialize moves straight from the move-set
// formulas, and the bracket check pins floor(n*phi) between consecutive
// Fibonacci ratios. None of this code is linked into the library.

#include <cstdint>
#include <vector>

namespace testoracle {

struct WythoffPairs {
    std::vector<std::uint64_t> lower;
    std::vector<std::uint64_t> upper;
};

// lower(n) = least value not used by any earlier pair, upper(n) = lower(n)+n.
WythoffPairs generate_wythoff_pairs(std::size_t count);

// g per its original case split, with upper-sequence membership answered
// from the pair generator above.
std::vector<int> generate_g(std::size_t count);

// 'P' / 'N' grids, [x][y], solved by definition: a non-terminal cell is P
// iff every materialized move lands on N.
std::vector<std::vector<char>> naive_outcomes(std::uint64_t threshold, bool misere,
                                              std::uint32_t bound);

std::vector<std::vector<int>> naive_grundy(std::uint64_t threshold, std::uint32_t bound);

// [x][y][z] outcome grid for the variant-plus-one-stone game.
std::vector<std::vector<std::vector<char>>> naive_sum_outcomes(std::uint32_t bound);

// True iff m == floor(n*phi), certified by sandwiching phi between two
// consecutive Fibonacci convergents (exact 128-bit cross-multiplication).
// Conclusive for n up to about 10^9.
bool floor_phi_bracket_ok(std::uint64_t n, std::uint64_t m);

// Small deterministic PRNG for property tests.
class XorShift {
public:
    explicit XorShift(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

}  // namespace testoracle
