#include "wythoff/solver.hpp"

#include <stdexcept>
#include <string>

namespace wythoff {

namespace {

std::uint64_t cell_count(std::uint32_t bound) {
    if (bound == UINT32_MAX) {
        throw std::length_error("board bound too large: cell count would overflow");
    }
    return (bound + std::uint64_t{1}) * (bound + std::uint64_t{1});
}

std::size_t word_count(std::uint32_t bound) {
    return static_cast<std::size_t>((cell_count(bound) + 63) / 64);
}

}  // namespace

OutcomeTable::OutcomeTable(std::uint32_t board_bound, const Ruleset& ruleset)
    : bound_(board_bound), ruleset_(ruleset), bits_(word_count(board_bound), 0) {}

GrundyTable::GrundyTable(std::uint32_t board_bound, const Ruleset& ruleset)
    : bound_(board_bound),
      ruleset_(ruleset),
      values_(static_cast<std::size_t>(cell_count(board_bound)), 0) {
    if (ruleset.convention == Convention::Misere) {
        throw std::invalid_argument("GrundyTable: values are undefined under misère play");
    }
}

void GrundyTable::set(std::uint64_t x, std::uint64_t y, std::uint64_t value) {
    if (value > 0xFFFF) {
        throw std::overflow_error("GrundyTable: value " + std::to_string(value) +
                                  " exceeds 16-bit storage");
    }
    const auto v = static_cast<std::uint16_t>(value);
    values_[x * (bound_ + std::uint64_t{1}) + y] = v;
    if (v > max_value_) {
        max_value_ = v;
    }
}

SumOutcomeTable::SumOutcomeTable(std::uint32_t board_bound)
    : bound_(board_bound), ruleset_{2, Convention::Normal} {
    bits_[0].assign(word_count(board_bound), 0);
    bits_[1].assign(word_count(board_bound), 0);
}

// Witness flags: a non-terminal cell is N exactly when a P cell precedes it
// in its row, its column, or its difference diagonal, since those prefixes
// are precisely the horizontal / vertical / diagonal move targets. The flags
// are maintained as cells are finalized; anti-diagonal order guarantees all
// predecessors of a cell are final before the cell is read.
OutcomeTable solve_outcomes(const Ruleset& r, std::uint32_t board_bound) {
    if (board_bound < r.terminal_threshold) {
        throw std::domain_error("solve_outcomes: board bound " + std::to_string(board_bound) +
                                " is below the terminal threshold " +
                                std::to_string(r.terminal_threshold));
    }
    OutcomeTable table(board_bound, r);
    const std::uint64_t n = board_bound;
    const bool terminal_is_p = (r.convention == Convention::Normal);

    std::vector<std::uint8_t> row_p(n + 1, 0);
    std::vector<std::uint8_t> col_p(n + 1, 0);
    std::vector<std::uint8_t> diag_p(2 * n + 1, 0);  // index x - y + n

    for (std::uint64_t s = 0; s <= 2 * n; ++s) {
        const std::uint64_t x_lo = s > n ? s - n : 0;
        const std::uint64_t x_hi = std::min(n, s);
        for (std::uint64_t x = x_lo; x <= x_hi; ++x) {
            const std::uint64_t y = s - x;
            bool p;
            if (x + y <= r.terminal_threshold) {
                p = terminal_is_p;
            } else {
                p = !(row_p[x] || col_p[y] || diag_p[x - y + n]);
            }
            if (p) {
                table.set_p(x, y);
                row_p[x] = col_p[y] = diag_p[x - y + n] = 1;
            }
        }
    }
    return table;
}

GrundyTable solve_grundy(const Ruleset& r, std::uint32_t board_bound) {
    if (r.convention == Convention::Misere) {
        throw std::invalid_argument("solve_grundy: Grundy values are undefined under misère play");
    }
    if (board_bound < r.terminal_threshold) {
        throw std::domain_error("solve_grundy: board bound " + std::to_string(board_bound) +
                                " is below the terminal threshold " +
                                std::to_string(r.terminal_threshold));
    }
    GrundyTable table(board_bound, r);
    const std::uint64_t n = board_bound;
    MexAccumulator acc;

    for (std::uint64_t s = 0; s <= 2 * n; ++s) {
        const std::uint64_t x_lo = s > n ? s - n : 0;
        const std::uint64_t x_hi = std::min(n, s);
        for (std::uint64_t x = x_lo; x <= x_hi; ++x) {
            const std::uint64_t y = s - x;
            const Position p{x, y};
            if (is_terminal(p, r)) {
                table.set(x, y, 0);
                continue;
            }
            acc.reset(static_cast<std::size_t>(x + y + std::min(x, y)));
            for_each_move(p, r, [&](Position q) {
                acc.insert(table.at(q.x, q.y));
                return true;
            });
            table.set(x, y, acc.mex());
        }
    }
    return table;
}

SumOutcomeTable solve_sum_outcomes(std::uint32_t board_bound) {
    if (board_bound < 2) {
        throw std::domain_error("solve_sum_outcomes: board bound must be >= 2");
    }
    SumOutcomeTable table(board_bound);
    const Ruleset r = table.ruleset();
    const std::uint64_t n = board_bound;

    std::vector<std::uint8_t> row_p[2];
    std::vector<std::uint8_t> col_p[2];
    std::vector<std::uint8_t> diag_p[2];
    for (int z = 0; z < 2; ++z) {
        row_p[z].assign(n + 1, 0);
        col_p[z].assign(n + 1, 0);
        diag_p[z].assign(2 * n + 1, 0);
    }

    for (std::uint64_t s = 0; s <= 2 * n; ++s) {
        const std::uint64_t x_lo = s > n ? s - n : 0;
        const std::uint64_t x_hi = std::min(n, s);
        for (std::uint64_t x = x_lo; x <= x_hi; ++x) {
            const std::uint64_t y = s - x;
            const bool queen_terminal = x + y <= r.terminal_threshold;
            for (std::uint8_t z = 0; z <= 1; ++z) {
                bool p;
                if (queen_terminal) {
                    // z == 0: the game is over, P under normal play.
                    // z == 1: only the stone-taking move remains.
                    p = (z == 0) ? true : !table.is_p(x, y, 0);
                } else {
                    bool n_pos = row_p[z][x] || col_p[z][y] || diag_p[z][x - y + n];
                    if (z == 1 && table.is_p(x, y, 0)) {
                        n_pos = true;
                    }
                    p = !n_pos;
                }
                if (p) {
                    table.set_p(x, y, z);
                    row_p[z][x] = col_p[z][y] = diag_p[z][x - y + n] = 1;
                }
            }
        }
    }
    return table;
}

void MexAccumulator::reset(std::size_t value_bound) {
    const std::size_t needed = value_bound + 1;
    if (stamp_.size() < needed) {
        stamp_.resize(needed, 0);
    }
    limit_ = needed;
    if (++generation_ == 0) {
        // generation counter wrapped: stale stamps could collide, wipe once
        std::fill(stamp_.begin(), stamp_.end(), 0);
        generation_ = 1;
    }
}

std::uint64_t MexAccumulator::mex() const {
    std::uint64_t v = 0;
    while (v < limit_ && stamp_[static_cast<std::size_t>(v)] == generation_) {
        ++v;
    }
    return v;
}

FixpointReport verify_fixpoint(const OutcomeTable& table) {
    FixpointReport report;
    const Ruleset& r = table.ruleset();
    const std::uint64_t n = table.board_bound();
    for (std::uint64_t x = 0; x <= n; ++x) {
        for (std::uint64_t y = 0; y <= n; ++y) {
            ++report.cells_checked;
            const Position p{x, y};
            bool expect_p;
            if (is_terminal(p, r)) {
                expect_p = (r.convention == Convention::Normal);
            } else {
                bool found_p_successor = false;
                for_each_move(p, r, [&](Position q) {
                    if (table.is_p(q.x, q.y)) {
                        found_p_successor = true;
                        return false;
                    }
                    return true;
                });
                expect_p = !found_p_successor;
            }
            if (expect_p != table.is_p(x, y)) {
                ++report.violations;
            }
        }
    }
    return report;
}

FixpointReport verify_fixpoint(const GrundyTable& table) {
    FixpointReport report;
    const Ruleset& r = table.ruleset();
    const std::uint64_t n = table.board_bound();
    MexAccumulator acc;
    for (std::uint64_t x = 0; x <= n; ++x) {
        for (std::uint64_t y = 0; y <= n; ++y) {
            ++report.cells_checked;
            const Position p{x, y};
            std::uint64_t expect;
            if (is_terminal(p, r)) {
                expect = 0;
            } else {
                acc.reset(static_cast<std::size_t>(x + y + std::min(x, y)));
                for_each_move(p, r, [&](Position q) {
                    acc.insert(table.at(q.x, q.y));
                    return true;
                });
                expect = acc.mex();
            }
            if (expect != table.at(x, y)) {
                ++report.violations;
            }
        }
    }
    return report;
}

FixpointReport verify_fixpoint(const SumOutcomeTable& table) {
    FixpointReport report;
    const Ruleset& r = table.ruleset();
    const std::uint64_t n = table.board_bound();
    for (std::uint64_t x = 0; x <= n; ++x) {
        for (std::uint64_t y = 0; y <= n; ++y) {
            for (std::uint8_t z = 0; z <= 1; ++z) {
                ++report.cells_checked;
                const SumPosition p{x, y, z};
                bool expect_p;
                if (is_terminal(p, r)) {
                    expect_p = true;
                } else {
                    bool found_p_successor = false;
                    for_each_sum_move(p, r, [&](const SumPosition& q) {
                        if (table.is_p(q.x, q.y, q.z)) {
                            found_p_successor = true;
                            return false;
                        }
                        return true;
                    });
                    expect_p = !found_p_successor;
                }
                if (expect_p != table.is_p(x, y, z)) {
                    ++report.violations;
                }
            }
        }
    }
    return report;
}

}  // namespace wythoff
