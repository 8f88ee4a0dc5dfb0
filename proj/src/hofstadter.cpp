#include "wythoff/hofstadter.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "wythoff/beatty.hpp"

namespace wythoff {

namespace {

// Incremental one-past-the-end ensure() calls are the common access
// pattern; growing capacity geometrically keeps them amortized O(1).
template <typename Vec>
void grow_capacity(Vec& values, std::uint64_t n) {
    if (values.capacity() < n + 1) {
        values.reserve(std::max<std::size_t>(n + 1, values.capacity() * 2));
    }
}

}  // namespace

void HTable::ensure(std::uint64_t n) {
    if (n < values_.size()) {
        return;
    }
    grow_capacity(values_, n);
    if (values_.empty()) {
        values_.push_back(0);
    }
    for (std::uint64_t i = values_.size(); i <= n; ++i) {
        const std::uint64_t inner = values_[values_[i - 1]];
        values_.push_back(i - inner);
    }
}

void GTable::ensure(std::uint64_t n) {
    if (n < values_.size()) {
        return;
    }
    grow_capacity(values_, n);
    if (values_.empty()) {
        values_.push_back(1);  // g(0)
    }
    if (values_.size() == 1 && n >= 1) {
        values_.push_back(0);  // g(1)
    }
    for (std::uint64_t i = values_.size(); i <= n; ++i) {
        const ConsecutiveTriple t = classify_triple(i);
        if (t.tag == TripleCase::UpperMiddle) {
            assert(t.m < i);
            values_.push_back(static_cast<GValue>(1 - values_[t.m]));
        } else {
            values_.push_back(1);
        }
    }
}

void GHofstadterTable::ensure(std::uint64_t n) {
    if (n < values_.size()) {
        return;
    }
    h_.ensure(n >= 1 ? n - 1 : 0);
    grow_capacity(values_, n);
    if (values_.empty()) {
        values_.push_back(1);
    }
    if (values_.size() == 1 && n >= 1) {
        values_.push_back(0);
    }
    for (std::uint64_t i = values_.size(); i <= n; ++i) {
        const std::uint64_t prev = h_.at(i - 1);
        if (h_.at(i - 2) < prev) {
            assert(prev < i);
            values_.push_back(static_cast<GValue>(1 - values_[prev]));
        } else {
            values_.push_back(1);
        }
    }
}

std::uint64_t h(std::uint64_t n) {
    thread_local HTable table;
    return table(n);
}

GValue g(std::uint64_t n) {
    thread_local GTable table;
    return table(n);
}

GValue g_hofstadter(std::uint64_t n) {
    thread_local GHofstadterTable table;
    return table(n);
}

std::uint64_t h_closed(std::uint64_t n) {
    if (n == UINT64_MAX) {
        throw std::out_of_range("h_closed: index would overflow");
    }
    return floor_div_phi(n + 1);
}

std::uint64_t f(std::uint64_t n) {
    if (n == 0) {
        throw std::domain_error("f: n must be >= 1");
    }
    const std::uint64_t m = floor_div_phi(n);
    const std::uint64_t ln = lower_wythoff(n);
    const std::uint64_t um = upper_wythoff(m);
    // lower(n)-2 <= upper(m) <= lower(n)-1, rearranged so the left side
    // cannot wrap at n == 1.
    if (!(um + 2 >= ln && um + 1 <= ln)) {
        throw std::logic_error("f: sandwich inequality violated (arithmetic bug)");
    }
    return m;
}

}  // namespace wythoff
