#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wythoff/closedform.hpp"

#include <set>
#include <vector>

#include "wythoff/solver.hpp"

using namespace wythoff;

namespace {
const std::vector<std::uint64_t> kB1First20 = {0,  0,  3,  4,  5,  7,  9,  11, 12, 14,
                                               15, 17, 18, 20, 22, 23, 25, 27, 28, 30};
const std::vector<std::uint64_t> kB2First20 = {1,  2,  6,  8,  10, 13, 16, 19, 21, 24,
                                               26, 29, 31, 34, 37, 39, 42, 45, 47, 50};

std::set<std::pair<std::uint64_t, std::uint64_t>> cells(const std::vector<PPairIndexed>& v) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> out;
    for (const PPairIndexed& p : v) {
        out.insert({p.first, p.second});
    }
    return out;
}
}  // namespace

TEST_CASE("b1 and b2 prefixes") {
    for (std::size_t n = 0; n < kB1First20.size(); ++n) {
        CHECK(b1(n) == kB1First20[n]);
        CHECK(b2(n) == kB2First20[n]);
    }
    CHECK(b1(0) == 0);
    CHECK(b2(0) == 1);
    CHECK(b1(2) == 3);
    CHECK(b2(2) == 6);
    CHECK(b1(4) == 5);
    CHECK(b2(4) == 10);
}

TEST_CASE("difference law b2(n) - b1(n) == n + 1") {
    for (std::uint64_t n = 0; n <= 20000; ++n) {
        CHECK(b2(n) - b1(n) == n + 1);
    }
}

TEST_CASE("p0 membership") {
    CHECK(p0_contains({0, 0}));
    CHECK(p0_contains({4, 7}));
    CHECK(p0_contains({7, 4}));
    CHECK(p0_contains({8, 13}));
    CHECK_FALSE(p0_contains({4, 6}));
    CHECK_FALSE(p0_contains({1, 1}));
}

TEST_CASE("p0 membership equals the enumerated family") {
    const std::uint64_t bound = 300;
    std::set<std::pair<std::uint64_t, std::uint64_t>> family;
    for (const auto& p : enumerate(PairFamily::P01, bound)) {
        family.insert({p.first, p.second});
    }
    for (const auto& p : enumerate(PairFamily::P02, bound)) {
        family.insert({p.first, p.second});
    }
    for (std::uint64_t x = 0; x <= bound; ++x) {
        for (std::uint64_t y = 0; y <= bound; ++y) {
            CHECK(p0_contains({x, y}) == (family.count({x, y}) > 0));
        }
    }
}

TEST_CASE("p1 membership") {
    CHECK(p1_contains({0, 0}));
    CHECK(p1_contains({1, 1}));
    CHECK(p1_contains({3, 6}));
    CHECK(p1_contains({6, 3}));
    CHECK(p1_contains({4, 8}));
    CHECK(p1_contains({8, 4}));
    CHECK(p1_contains({0, 1}));
    CHECK(p1_contains({2, 0}));
    CHECK_FALSE(p1_contains({2, 2}));
    CHECK_FALSE(p1_contains({3, 5}));
}

TEST_CASE("p1 membership equals the enumerated family") {
    const std::uint64_t bound = 300;
    std::set<std::pair<std::uint64_t, std::uint64_t>> family{{0, 0}, {1, 1}};
    for (const auto& p : enumerate(PairFamily::P11, bound)) {
        family.insert({p.first, p.second});
    }
    for (const auto& p : enumerate(PairFamily::P12, bound)) {
        family.insert({p.first, p.second});
    }
    for (std::uint64_t x = 0; x <= bound; ++x) {
        for (std::uint64_t y = 0; y <= bound; ++y) {
            CHECK(p1_contains({x, y}) == (family.count({x, y}) > 0));
        }
    }
}

TEST_CASE("p2 membership") {
    CHECK(p2_contains({4, 4}));
    CHECK(p2_contains({5, 7}));
    CHECK_FALSE(p0_contains({5, 7}));  // the small-board exception
    CHECK(p2_contains({8, 13}));
    CHECK_FALSE(p2_contains({0, 0}));
    CHECK_FALSE(p2_contains({3, 6}));
}

TEST_CASE("p2 equals the misère oracle") {
    const OutcomeTable oracle = solve_outcomes({2, Convention::Misere}, 60);
    for (std::uint64_t x = 0; x <= 60; ++x) {
        for (std::uint64_t y = 0; y <= 60; ++y) {
            CHECK(p2_contains({x, y}) == oracle.is_p(x, y));
        }
    }
}

TEST_CASE("p1 equals the variant oracle") {
    const OutcomeTable oracle = solve_outcomes({2, Convention::Normal}, 60);
    for (std::uint64_t x = 0; x <= 60; ++x) {
        for (std::uint64_t y = 0; y <= 60; ++y) {
            CHECK(p1_contains({x, y}) == oracle.is_p(x, y));
        }
    }
}

TEST_CASE("p0 equals the classical oracle") {
    const OutcomeTable oracle = solve_outcomes({0, Convention::Normal}, 60);
    for (std::uint64_t x = 0; x <= 60; ++x) {
        for (std::uint64_t y = 0; y <= 60; ++y) {
            CHECK(p0_contains({x, y}) == oracle.is_p(x, y));
        }
    }
}

TEST_CASE("p4 membership") {
    CHECK(p4_contains({3, 6, 0}));
    CHECK(p4_contains({4, 4, 1}));
    CHECK_FALSE(p4_contains({3, 6, 1}));
    CHECK_FALSE(p4_contains({4, 4, 0}));
    CHECK(p4_contains({0, 3, 1}));
    CHECK(p4_contains({8, 13, 1}));
    CHECK_FALSE(p4_contains({8, 13, 0}));  // variant value there is 1, not 0
}

TEST_CASE("literal sets") {
    CHECK(set_a().size() == 8);
    CHECK(set_b().size() == 7);
    CHECK(set_c().size() == 7);
    CHECK(set_a_star().size() == 8);
    CHECK(set_b_star().size() == 7);
    for (const SumPosition& p : set_a_star()) {
        CHECK(p.z == 0);
    }
    for (const SumPosition& p : set_b_star()) {
        CHECK(p.z == 1);
    }
}

TEST_CASE("enumerate: frozen families") {
    using Cell = std::pair<std::uint64_t, std::uint64_t>;
    CHECK(cells(enumerate(PairFamily::P01, 7)) ==
          std::set<Cell>{{0, 0}, {1, 2}, {3, 5}, {4, 7}});
    CHECK(cells(enumerate(PairFamily::P02, 7)) == std::set<Cell>{{2, 1}, {5, 3}, {7, 4}});
    CHECK(cells(enumerate(PairFamily::P11, 7)) == std::set<Cell>{{0, 1}, {0, 2}, {3, 6}});
    CHECK(cells(enumerate(PairFamily::P12, 7)) == std::set<Cell>{{1, 0}, {2, 0}, {6, 3}});

    CHECK(cells(enumerate(PairFamily::P01, 0)) == std::set<Cell>{{0, 0}});
    CHECK(enumerate(PairFamily::P02, 0).empty());
    CHECK(enumerate(PairFamily::P11, 0).empty());
    CHECK(enumerate(PairFamily::P12, 0).empty());
}

TEST_CASE("enumerate: ordering and bounds") {
    const auto list = enumerate(PairFamily::P11, 500);
    for (std::size_t i = 0; i < list.size(); ++i) {
        CHECK(list[i].first <= 500);
        CHECK(list[i].second <= 500);
        CHECK(list[i].first == b1(list[i].n));
        CHECK(list[i].second == b2(list[i].n));
        if (i > 0) {
            CHECK(list[i].n > list[i - 1].n);
        }
    }
    // nothing missing: the next pair is out of bounds
    CHECK(b2(list.back().n + 1) > 500);
}

TEST_CASE("p0 pairs with both coordinates at most 12") {
    // the chart-level cell list, generated rather than transcribed
    std::set<std::pair<std::uint64_t, std::uint64_t>> family;
    for (const auto& p : enumerate(PairFamily::P01, 12)) {
        family.insert({p.first, p.second});
    }
    for (const auto& p : enumerate(PairFamily::P02, 12)) {
        family.insert({p.first, p.second});
    }
    const std::set<std::pair<std::uint64_t, std::uint64_t>> expect{
        {0, 0}, {1, 2}, {2, 1}, {3, 5}, {5, 3}, {4, 7}, {7, 4}, {6, 10}, {10, 6}};
    CHECK(family == expect);
}
