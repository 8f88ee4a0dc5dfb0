#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wythoff {

// Exhaustive cross-checking of the closed forms against the retrograde
// oracle, one report per claim. Sweeps never sample: checked_count is the
// full sweep size for the claim at the stated bound, and every mismatch is
// counted even though only the first `mismatch_cap` are materialized.
//
// Mismatch orientation: `expected` is what the closed form / claimed
// characterization predicts, `actual` is what the brute-force oracle (or
// direct recomputation) produced.

inline constexpr std::size_t kDefaultMismatchCap = 100;

struct Mismatch {
    std::string location;
    std::string expected;
    std::string actual;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct VerificationReport {
    std::string claim_id;
    std::uint64_t bound = 0;
    std::uint64_t checked_count = 0;
    std::uint64_t mismatch_count = 0;
    std::vector<Mismatch> mismatches;  // first mismatch_cap entries only
    std::string note;                  // optional descriptive finding

    bool passed() const { return mismatch_count == 0; }
};

// One line per record plus indented mismatch/note lines; byte-identical for
// identical inputs.
std::string serialize_report(const VerificationReport& report);

// --- board-oracle claims ------------------------------------------------

// Variant closed form: p1_contains == (threshold 2, normal) oracle on the
// region x+y <= bound. Requires bound >= 2.
VerificationReport verify_p1_theorem(std::uint32_t bound,
                                     std::size_t mismatch_cap = kDefaultMismatchCap);

// Misère oracle == set B on the 7x7 corner, == p0_contains where x >= 8 or
// y >= 8, on the region x+y <= bound. Requires bound >= 8.
VerificationReport verify_misere_theorem(std::uint32_t bound,
                                         std::size_t mismatch_cap = kDefaultMismatchCap);

// Variant Grundy value == 1 exactly on classical-Wythoff P cells, for cells
// with x >= 8 or y >= 8 in the region. Requires bound >= 8.
VerificationReport verify_grundy_one_theorem(std::uint32_t bound,
                                             std::size_t mismatch_cap = kDefaultMismatchCap);

// Sum-game oracle == p4_contains on both z layers of the region, and its
// 7x7 slice == A* ∪ B*. Requires bound >= 8.
VerificationReport verify_sum_theorem(std::uint32_t bound,
                                      std::size_t mismatch_cap = kDefaultMismatchCap);

// --- sequence / structure claims ----------------------------------------

VerificationReport verify_h_closed_form(std::uint64_t bound,
                                        std::size_t mismatch_cap = kDefaultMismatchCap);
VerificationReport verify_g_equivalence(std::uint64_t bound,
                                        std::size_t mismatch_cap = kDefaultMismatchCap);
VerificationReport verify_f_bridge(std::uint64_t bound,
                                   std::size_t mismatch_cap = kDefaultMismatchCap);
VerificationReport verify_rayleigh_partition(std::uint64_t bound,
                                             std::size_t mismatch_cap = kDefaultMismatchCap);
VerificationReport verify_gap_bounds(std::uint64_t bound,
                                     std::size_t mismatch_cap = kDefaultMismatchCap);
VerificationReport verify_triple_classification(std::uint64_t bound,
                                                std::size_t mismatch_cap = kDefaultMismatchCap);

// Coverage of {0..bound} by B1 ∪ B2, strict growth of b2 (n >= 1) and b1
// (n >= 2, the single flat step b1(0) == b1(1) is expected and recorded),
// and the computed intersection B1 ∩ B2, which must be identical at bounds
// bound/100, bound/10 and bound. The intersection is reported in the note,
// never asserted against a preconceived value.
VerificationReport verify_b1b2_structure(std::uint64_t bound,
                                         std::size_t mismatch_cap = kDefaultMismatchCap);

// For every on-board (x, y) outside the 7x7 corner: the horizontal /
// vertical / diagonal move sets hit the literal set B iff they hit the
// literal set C. Quadratic in the bound. Requires bound >= 8.
VerificationReport verify_moveset_window(std::uint32_t bound,
                                         std::size_t mismatch_cap = kDefaultMismatchCap);

// Bundle of the sequence/structure claims above, each at `bound`, except
// the board-quadratic moveset window which is capped at 1024 inside the
// bundle (run it alone for larger boards; its report records the bound it
// actually used).
std::vector<VerificationReport> verify_sequences(std::uint64_t bound,
                                                 std::size_t mismatch_cap = kDefaultMismatchCap);

// --- structural properties of P1 ----------------------------------------

// No move connects two members of the variant P-set (region x+y <= bound).
VerificationReport verify_p1_no_self_reach(std::uint32_t bound,
                                           std::size_t mismatch_cap = kDefaultMismatchCap);

// Every non-member of the variant P-set in the region has a move into it.
VerificationReport verify_p1_reachability(std::uint32_t bound,
                                          std::size_t mismatch_cap = kDefaultMismatchCap);

// --- solver self-consistency ----------------------------------------------

// Grundy-0 cells == oracle P cells for thresholds 0 and 2 on the region.
VerificationReport verify_grundy_outcome(std::uint32_t bound,
                                         std::size_t mismatch_cap = kDefaultMismatchCap);

// Second-pass fixpoint re-verification of every solved table kind at the
// bound (outcomes for both thresholds and conventions, Grundy for both
// thresholds, the sum game).
VerificationReport verify_solver_fixpoint(std::uint32_t bound,
                                          std::size_t mismatch_cap = kDefaultMismatchCap);

// Sum-game outcomes against variant Grundy values: (x,y,1) is P iff the
// value is 1, (x,y,0) is P iff the value is 0.
VerificationReport verify_sum_grundy(std::uint32_t bound,
                                     std::size_t mismatch_cap = kDefaultMismatchCap);

// --- claim registry -------------------------------------------------------

struct ClaimSpec {
    std::string id;
    std::uint64_t min_bound;
};

// All registered claim ids with their minimum bounds, in canonical order.
const std::vector<ClaimSpec>& claim_registry();

// Run the named claims (every id must be registered) at the given bound.
// Throws std::invalid_argument for an unknown id and std::domain_error when
// the bound is below a requested claim's minimum.
std::vector<VerificationReport> run_claims(const std::vector<std::string>& ids,
                                           std::uint64_t bound,
                                           std::size_t mismatch_cap = kDefaultMismatchCap);

}  // namespace wythoff
