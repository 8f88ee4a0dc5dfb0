#include "wythoff/rules.hpp"

namespace wythoff {

std::vector<Position> moves(Position p, const Ruleset& r) {
    std::vector<Position> out;
    if (!is_terminal(p, r)) {
        out.reserve(static_cast<std::size_t>(p.x + p.y + std::min(p.x, p.y)));
        for_each_move(p, r, [&](Position q) {
            out.push_back(q);
            return true;
        });
    }
    return out;
}

std::vector<SumPosition> sum_moves(const SumPosition& p, const Ruleset& r) {
    std::vector<SumPosition> out;
    for_each_sum_move(p, r, [&](SumPosition q) {
        out.push_back(q);
        return true;
    });
    return out;
}

std::uint64_t mex(std::span<const std::uint64_t> values) {
    std::vector<std::uint64_t> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    std::uint64_t least = 0;
    for (std::uint64_t v : sorted) {
        if (v == least) {
            ++least;
        } else if (v > least) {
            break;
        }
    }
    return least;
}

}  // namespace wythoff
