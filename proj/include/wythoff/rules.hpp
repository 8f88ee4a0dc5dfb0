#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace wythoff {

// Position types, terminal sets, and move generation for the queen-on-a-grid
// family of games: classical Wythoff (terminal threshold 0), the variant
// whose terminal set is {(x,y) : x+y <= 2}, the misère reading of either,
// and the disjunctive sum with a one-stone Nim pile.

struct Position {
    std::uint64_t x = 0;
    std::uint64_t y = 0;

    friend bool operator==(const Position&, const Position&) = default;
    friend auto operator<=>(const Position&, const Position&) = default;
};

struct SumPosition {
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    std::uint8_t z = 0;  // one stone left in the Nim pile iff z == 1

    friend bool operator==(const SumPosition&, const SumPosition&) = default;
    friend auto operator<=>(const SumPosition&, const SumPosition&) = default;
};

enum class Convention : std::uint8_t { Normal, Misere };

struct Ruleset {
    // t = 0 reproduces classical Wythoff; t = 2 the variant.
    std::uint64_t terminal_threshold = 2;
    Convention convention = Convention::Normal;

    friend bool operator==(const Ruleset&, const Ruleset&) = default;
};

inline bool is_terminal(Position p, const Ruleset& r) {
    return p.x + p.y <= r.terminal_threshold;
}

// The sum game ends once the queen component is terminal and the Nim stone
// is gone.
inline bool is_terminal(const SumPosition& p, const Ruleset& r) {
    return p.z == 0 && p.x + p.y <= r.terminal_threshold;
}

// Visit every position reachable in one move: horizontal (smaller x, same y),
// vertical (same x, smaller y), diagonal (both reduced by the same amount).
// Positions inside the terminal set generate no moves at all: moving into
// the set ends the game. Destinations inside the set are reachable, though.
//
// The visitor returns false to stop the walk early; for_each_move returns
// false iff it was stopped.
template <typename Visitor>
bool for_each_move(Position p, const Ruleset& r, Visitor&& visit) {
    if (is_terminal(p, r)) {
        return true;
    }
    for (std::uint64_t u = 0; u < p.x; ++u) {
        if (!visit(Position{u, p.y})) {
            return false;
        }
    }
    for (std::uint64_t v = 0; v < p.y; ++v) {
        if (!visit(Position{p.x, v})) {
            return false;
        }
    }
    const std::uint64_t diag = std::min(p.x, p.y);
    for (std::uint64_t k = 1; k <= diag; ++k) {
        if (!visit(Position{p.x - k, p.y - k})) {
            return false;
        }
    }
    return true;
}

// Sum-game moves: any queen move with the Nim pile untouched, plus taking
// the Nim stone. Once the queen component is terminal it is frozen and only
// the Nim stone remains.
template <typename Visitor>
bool for_each_sum_move(const SumPosition& p, const Ruleset& r, Visitor&& visit) {
    const bool queen_done = is_terminal(Position{p.x, p.y}, r);
    if (!queen_done) {
        const bool completed = for_each_move(Position{p.x, p.y}, r, [&](Position q) {
            return visit(SumPosition{q.x, q.y, p.z});
        });
        if (!completed) {
            return false;
        }
    }
    if (p.z == 1) {
        return visit(SumPosition{p.x, p.y, 0});
    }
    return true;
}

// Materialized forms of the two generators above.
std::vector<Position> moves(Position p, const Ruleset& r);
std::vector<SumPosition> sum_moves(const SumPosition& p, const Ruleset& r);

// Least non-negative integer absent from the values.
std::uint64_t mex(std::span<const std::uint64_t> values);

}  // namespace wythoff
