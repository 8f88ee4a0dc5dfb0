#include "wythoff/closedform.hpp"

#include <algorithm>
#include <utility>

#include "wythoff/beatty.hpp"
#include "wythoff/hofstadter.hpp"

namespace wythoff {

std::uint64_t b1(std::uint64_t n) {
    return lower_wythoff(n) + g(n) - 1;  // g(0) == 1, so n == 0 cannot wrap
}

std::uint64_t b2(std::uint64_t n) {
    return upper_wythoff(n) + g(n);
}

bool p0_contains(Position p) {
    const auto [s, t] = std::minmax(p.x, p.y);
    const std::uint64_t n = t - s;
    if (n > kIndexMax) {
        return false;  // upper(n) would not fit the coordinate type
    }
    return s == lower_wythoff(n);
}

bool p1_contains(Position p) {
    if ((p.x == 0 && p.y == 0) || (p.x == 1 && p.y == 1)) {
        return true;
    }
    const auto [s, t] = std::minmax(p.x, p.y);
    if (t == s) {
        return false;
    }
    const std::uint64_t n = t - s - 1;
    if (n > kIndexMax) {
        return false;
    }
    // b1(n) is lower(n) or lower(n) - 1; reject cheaply before touching the
    // g memo so stray probes with a huge coordinate difference stay O(1).
    const std::uint64_t ln = lower_wythoff(n);
    if (s != ln && s + 1 != ln) {
        return false;
    }
    return s == b1(n) && t == b2(n);
}

bool p2_contains(Position p) {
    if (p.x <= 7 && p.y <= 7) {
        const auto& b = set_b();
        return std::find(b.begin(), b.end(), p) != b.end();
    }
    return p0_contains(p);
}

bool p4_contains(const SumPosition& p) {
    const Position q{p.x, p.y};
    return p.z == 1 ? p2_contains(q) : p1_contains(q);
}

const std::vector<Position>& set_a() {
    static const std::vector<Position> a = {{0, 0}, {0, 1}, {0, 2}, {1, 0},
                                            {1, 1}, {2, 0}, {3, 6}, {6, 3}};
    return a;
}

const std::vector<Position>& set_b() {
    static const std::vector<Position> b = {{0, 3}, {1, 2}, {2, 1}, {3, 0},
                                            {4, 4}, {5, 7}, {7, 5}};
    return b;
}

const std::vector<Position>& set_c() {
    static const std::vector<Position> c = {{0, 0}, {1, 2}, {2, 1}, {3, 5},
                                            {5, 3}, {4, 7}, {7, 4}};
    return c;
}

std::vector<SumPosition> set_a_star() {
    std::vector<SumPosition> out;
    out.reserve(set_a().size());
    for (Position p : set_a()) {
        out.push_back({p.x, p.y, 0});
    }
    return out;
}

std::vector<SumPosition> set_b_star() {
    std::vector<SumPosition> out;
    out.reserve(set_b().size());
    for (Position p : set_b()) {
        out.push_back({p.x, p.y, 1});
    }
    return out;
}

std::vector<PPairIndexed> enumerate(PairFamily family, std::uint64_t bound) {
    const bool swapped = (family == PairFamily::P02 || family == PairFamily::P12);
    const bool b_family = (family == PairFamily::P11 || family == PairFamily::P12);

    std::vector<PPairIndexed> out;
    for (std::uint64_t n = 0;; ++n) {
        // The larger coordinate (upper(n) resp. b2(n)) is strictly
        // increasing, so the first pair past the bound ends the walk.
        const std::uint64_t small = b_family ? b1(n) : lower_wythoff(n);
        const std::uint64_t large = b_family ? b2(n) : upper_wythoff(n);
        if (large > bound) {
            break;
        }
        if (swapped && small == large) {
            continue;  // (0,0) already belongs to the unswapped listing
        }
        if (swapped) {
            out.push_back({n, large, small, family});
        } else {
            out.push_back({n, small, large, family});
        }
    }
    return out;
}

}  // namespace wythoff
