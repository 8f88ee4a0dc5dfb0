#pragma once

#include <cstdint>
#include <vector>

namespace wythoff {

// Hofstadter's G-sequence h(0)=0, h(n) = n - h(h(n-1)), the bridging index
// f, and the two-valued sequence g in both of its formulations. Every
// recurrence is evaluated bottom-up into a memo table: the nested recursion
// would blow the call stack long before the interesting range, and filling
// in index order keeps the whole prefix O(n).

class HTable {
public:
    // Extend the table so indices 0..n are valid.
    void ensure(std::uint64_t n);

    // Read a filled entry. No bounds hand-holding beyond the debug assert;
    // callers pair this with ensure().
    std::uint64_t at(std::uint64_t n) const { return values_[n]; }

    std::uint64_t operator()(std::uint64_t n) {
        ensure(n);
        return values_[n];
    }

    std::size_t size() const { return values_.size(); }

private:
    std::vector<std::uint64_t> values_;
};

// g values are always 0 or 1.
using GValue = std::uint8_t;

// g per the original definition: g(0)=1, g(1)=0, then g(n) = 1 - g(m) when
// lower(n) == upper(m) + 1 for some m, else 1. The case split is decided by
// beatty::classify_triple, so this table and GHofstadterTable share no code.
class GTable {
public:
    void ensure(std::uint64_t n);
    GValue at(std::uint64_t n) const { return values_[n]; }
    GValue operator()(std::uint64_t n) {
        ensure(n);
        return values_[n];
    }
    std::size_t size() const { return values_.size(); }

private:
    std::vector<GValue> values_;
};

// The same function recomputed purely from the h recurrence:
// g(n) = 1 - g(h(n-1)) when h(n-2) < h(n-1), else 1, for n >= 2.
// Kept fully independent of the beatty path; the equality of the two tables
// is a theorem under test, so sharing code would make that test vacuous.
class GHofstadterTable {
public:
    void ensure(std::uint64_t n);
    GValue at(std::uint64_t n) const { return values_[n]; }
    GValue operator()(std::uint64_t n) {
        ensure(n);
        return values_[n];
    }
    std::size_t size() const { return values_.size(); }

private:
    HTable h_;
    std::vector<GValue> values_;
};

// Convenience entry points over thread-local tables. Each thread owns its
// tables, so these are safe to call concurrently.
std::uint64_t h(std::uint64_t n);
GValue g(std::uint64_t n);
GValue g_hofstadter(std::uint64_t n);

// floor((n+1)/phi), the closed form of h. Range-checked through beatty.
std::uint64_t h_closed(std::uint64_t n);

// The unique m with lower(n)-2 <= upper(m) <= lower(n)-1, computed as
// floor(n/phi). The sandwich inequality is re-checked before returning;
// a violation would be an arithmetic bug, not a caller error, and throws
// std::logic_error. Requires n >= 1 (std::domain_error otherwise).
std::uint64_t f(std::uint64_t n);

}  // namespace wythoff
