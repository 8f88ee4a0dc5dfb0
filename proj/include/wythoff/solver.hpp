#pragma once

#include <cstdint>
#include <vector>

#include "wythoff/rules.hpp"

namespace wythoff {

// Brute-force retrograde oracle over bounded boards: P/N outcome classes
// under either convention, Sprague-Grundy values under normal play, and the
// sum game with a one-stone Nim pile.
//
// Everything is filled in anti-diagonal order (x+y = 0, 1, 2, ...): every
// move strictly decreases x+y, so all successors of a cell live on earlier
// anti-diagonals. Cells within one anti-diagonal never share a row, column,
// or difference diagonal, which is what makes the witness-flag fill below
// exact and would make an intra-diagonal parallel fill observably identical.

enum class Outcome : std::uint8_t { P = 0, N = 1 };

inline char outcome_letter(Outcome o) { return o == Outcome::P ? 'P' : 'N'; }

// Dense (bound+1) x (bound+1) grid of outcomes, one bit per cell.
class OutcomeTable {
public:
    OutcomeTable(std::uint32_t board_bound, const Ruleset& ruleset);

    std::uint32_t board_bound() const { return bound_; }
    const Ruleset& ruleset() const { return ruleset_; }

    bool is_p(std::uint64_t x, std::uint64_t y) const {
        const std::uint64_t i = index(x, y);
        return (bits_[i >> 6] >> (i & 63)) & 1u;
    }
    Outcome at(std::uint64_t x, std::uint64_t y) const {
        return is_p(x, y) ? Outcome::P : Outcome::N;
    }

    void set_p(std::uint64_t x, std::uint64_t y) {
        const std::uint64_t i = index(x, y);
        bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

private:
    std::uint64_t index(std::uint64_t x, std::uint64_t y) const {
        return x * (bound_ + std::uint64_t{1}) + y;
    }

    std::uint32_t bound_;
    Ruleset ruleset_;
    std::vector<std::uint64_t> bits_;
};

// Dense grid of Grundy values (normal convention only). Values are held in
// 16 bits; every write is overflow-checked and the observed maximum is kept
// for serialization to pick a narrower width.
class GrundyTable {
public:
    GrundyTable(std::uint32_t board_bound, const Ruleset& ruleset);

    std::uint32_t board_bound() const { return bound_; }
    const Ruleset& ruleset() const { return ruleset_; }
    std::uint16_t max_value() const { return max_value_; }

    std::uint16_t at(std::uint64_t x, std::uint64_t y) const {
        return values_[x * (bound_ + std::uint64_t{1}) + y];
    }

    void set(std::uint64_t x, std::uint64_t y, std::uint64_t value);

private:
    std::uint32_t bound_;
    Ruleset ruleset_;
    std::uint16_t max_value_ = 0;
    std::vector<std::uint16_t> values_;
};

// Outcomes of the sum game over (x, y, z), bit-packed per z layer.
class SumOutcomeTable {
public:
    explicit SumOutcomeTable(std::uint32_t board_bound);

    std::uint32_t board_bound() const { return bound_; }
    const Ruleset& ruleset() const { return ruleset_; }

    bool is_p(std::uint64_t x, std::uint64_t y, std::uint8_t z) const {
        const std::uint64_t i = index(x, y);
        return (bits_[z][i >> 6] >> (i & 63)) & 1u;
    }
    Outcome at(std::uint64_t x, std::uint64_t y, std::uint8_t z) const {
        return is_p(x, y, z) ? Outcome::P : Outcome::N;
    }

    void set_p(std::uint64_t x, std::uint64_t y, std::uint8_t z) {
        const std::uint64_t i = index(x, y);
        bits_[z][i >> 6] |= std::uint64_t{1} << (i & 63);
    }

private:
    std::uint64_t index(std::uint64_t x, std::uint64_t y) const {
        return x * (bound_ + std::uint64_t{1}) + y;
    }

    std::uint32_t bound_;
    Ruleset ruleset_;
    std::vector<std::uint64_t> bits_[2];
};

// Retrograde outcome solve. Terminal cells are P under normal play (the
// player who moved in won) and N under misère play (the player to move has
// already won because the previous player lost by entering the set).
// Throws std::domain_error when board_bound < terminal_threshold.
OutcomeTable solve_outcomes(const Ruleset& r, std::uint32_t board_bound);

// Grundy values under normal play; terminal cells carry 0 = mex of nothing.
// Misère rulesets are rejected with std::invalid_argument: misère Grundy
// values are not defined here.
GrundyTable solve_grundy(const Ruleset& r, std::uint32_t board_bound);

// Sum-game outcomes for the variant (threshold 2, normal play) plus a
// one-stone Nim pile. For each cell the z=0 layer is solved first since the
// stone-taking move points from z=1 to z=0 on the same anti-diagonal.
// Requires board_bound >= 2.
SumOutcomeTable solve_sum_outcomes(std::uint32_t board_bound);

// Reusable mex scratch: a stamp array cleared in O(1) by bumping a
// generation counter. reset(k) prepares for values < k; larger inserts are
// ignored, which is sound because mex never exceeds the insert count.
class MexAccumulator {
public:
    void reset(std::size_t value_bound);
    void insert(std::uint64_t v) {
        if (v < limit_) {
            stamp_[static_cast<std::size_t>(v)] = generation_;
        }
    }
    std::uint64_t mex() const;

private:
    std::vector<std::uint32_t> stamp_;
    std::uint32_t generation_ = 0;
    std::size_t limit_ = 0;
};

// Second-pass re-verification, independent of the fill order: every cell's
// stored classification is recomputed from its successors' stored values.
struct FixpointReport {
    std::uint64_t cells_checked = 0;
    std::uint64_t violations = 0;
};

FixpointReport verify_fixpoint(const OutcomeTable& table);
FixpointReport verify_fixpoint(const GrundyTable& table);
FixpointReport verify_fixpoint(const SumOutcomeTable& table);

}  // namespace wythoff
