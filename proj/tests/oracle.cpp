#include "oracle.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace testoracle {

WythoffPairs generate_wythoff_pairs(std::size_t count) {
    WythoffPairs out;
    out.lower.reserve(count);
    out.upper.reserve(count);
    std::unordered_set<std::uint64_t> used;
    std::uint64_t next_free = 0;
    for (std::size_t n = 0; n < count; ++n) {
        std::uint64_t a;
        if (n == 0) {
            a = 0;
        } else {
            while (used.count(next_free)) {
                ++next_free;
            }
            a = next_free;
        }
        const std::uint64_t b = a + n;
        used.insert(a);
        used.insert(b);
        out.lower.push_back(a);
        out.upper.push_back(b);
    }
    return out;
}

std::vector<int> generate_g(std::size_t count) {
    // membership map for the upper sequence, from the pair generator
    const WythoffPairs pairs = generate_wythoff_pairs(2 * count + 4);
    std::unordered_map<std::uint64_t, std::uint64_t> upper_index;
    for (std::size_t m = 0; m < pairs.upper.size(); ++m) {
        upper_index.emplace(pairs.upper[m], m);
    }
    std::vector<int> g;
    g.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        if (n == 0) {
            g.push_back(1);
            continue;
        }
        if (n == 1) {
            g.push_back(0);
            continue;
        }
        const auto it = upper_index.find(pairs.lower[n] - 1);
        if (it != upper_index.end()) {
            g.push_back(1 - g[static_cast<std::size_t>(it->second)]);
        } else {
            g.push_back(1);
        }
    }
    return g;
}

namespace {

std::vector<std::pair<std::uint64_t, std::uint64_t>> formula_moves(std::uint64_t x,
                                                                   std::uint64_t y,
                                                                   std::uint64_t threshold) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    if (x + y <= threshold) {
        return out;
    }
    for (std::uint64_t u = 0; u < x; ++u) {
        out.emplace_back(u, y);
    }
    for (std::uint64_t v = 0; v < y; ++v) {
        out.emplace_back(x, v);
    }
    for (std::uint64_t k = 1; k <= std::min(x, y); ++k) {
        out.emplace_back(x - k, y - k);
    }
    return out;
}

}  // namespace

std::vector<std::vector<char>> naive_outcomes(std::uint64_t threshold, bool misere,
                                              std::uint32_t bound) {
    std::vector<std::vector<char>> grid(bound + 1, std::vector<char>(bound + 1, '?'));
    for (std::uint64_t s = 0; s <= 2 * std::uint64_t{bound}; ++s) {
        for (std::uint64_t x = (s > bound ? s - bound : 0); x <= std::min<std::uint64_t>(bound, s);
             ++x) {
            const std::uint64_t y = s - x;
            if (x + y <= threshold) {
                grid[x][y] = misere ? 'N' : 'P';
                continue;
            }
            bool all_n = true;
            for (const auto& [u, v] : formula_moves(x, y, threshold)) {
                if (grid[u][v] == 'P') {
                    all_n = false;
                    break;
                }
            }
            grid[x][y] = all_n ? 'P' : 'N';
        }
    }
    return grid;
}

std::vector<std::vector<int>> naive_grundy(std::uint64_t threshold, std::uint32_t bound) {
    std::vector<std::vector<int>> grid(bound + 1, std::vector<int>(bound + 1, -1));
    for (std::uint64_t s = 0; s <= 2 * std::uint64_t{bound}; ++s) {
        for (std::uint64_t x = (s > bound ? s - bound : 0); x <= std::min<std::uint64_t>(bound, s);
             ++x) {
            const std::uint64_t y = s - x;
            std::set<int> seen;
            for (const auto& [u, v] : formula_moves(x, y, threshold)) {
                seen.insert(grid[u][v]);
            }
            int m = 0;
            while (seen.count(m)) {
                ++m;
            }
            grid[x][y] = m;
        }
    }
    return grid;
}

std::vector<std::vector<std::vector<char>>> naive_sum_outcomes(std::uint32_t bound) {
    const std::uint64_t threshold = 2;
    std::vector<std::vector<std::vector<char>>> grid(
        bound + 1, std::vector<std::vector<char>>(bound + 1, std::vector<char>(2, '?')));
    for (std::uint64_t s = 0; s <= 2 * std::uint64_t{bound}; ++s) {
        for (std::uint64_t x = (s > bound ? s - bound : 0); x <= std::min<std::uint64_t>(bound, s);
             ++x) {
            const std::uint64_t y = s - x;
            for (int z = 0; z <= 1; ++z) {
                std::vector<std::pair<std::uint64_t, std::uint64_t>> queen_moves =
                    formula_moves(x, y, threshold);
                bool all_n = true;
                for (const auto& [u, v] : queen_moves) {
                    if (grid[u][v][z] == 'P') {
                        all_n = false;
                        break;
                    }
                }
                if (all_n && z == 1 && grid[x][y][0] == 'P') {
                    all_n = false;
                }
                const bool has_moves = !queen_moves.empty() || z == 1;
                grid[x][y][z] = (!has_moves || all_n) ? 'P' : 'N';
            }
        }
    }
    return grid;
}

bool floor_phi_bracket_ok(std::uint64_t n, std::uint64_t m) {
    using u128 = unsigned __int128;
    // consecutive Fibonacci numbers; the ratios bracket phi from both sides
    const std::uint64_t f47 = 2971215073ULL;
    const std::uint64_t f48 = 4807526976ULL;
    const std::uint64_t f49 = 7778742049ULL;
    // ratio A = f48/f47, ratio B = f49/f48; order them by cross product
    const bool a_below = u128{f48} * f48 < u128{f49} * f47;
    const std::uint64_t lo_num = a_below ? f48 : f49;
    const std::uint64_t lo_den = a_below ? f47 : f48;
    const std::uint64_t hi_num = a_below ? f49 : f48;
    const std::uint64_t hi_den = a_below ? f48 : f47;
    // m <= n*lo  and  n*hi < m+1 certify m == floor(n*phi)
    const bool lower_ok = u128{m} * lo_den <= u128{n} * lo_num;
    const bool upper_ok = u128{n} * hi_num < u128{m + 1} * hi_den;
    return lower_ok && upper_ok;
}

}  // namespace testoracle
