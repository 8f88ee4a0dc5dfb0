#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wythoff/verify.hpp"

#include <set>
#include <stdexcept>

using namespace wythoff;

TEST_CASE("p1 theorem at the corner bound") {
    const VerificationReport r = verify_p1_theorem(7);
    CHECK(r.passed());
    CHECK(r.checked_count == 36);  // cells with x + y <= 7
    CHECK(r.mismatch_count == 0);
    CHECK(r.claim_id == "p1-theorem");
}

TEST_CASE("p1 theorem at a working bound") {
    CHECK(verify_p1_theorem(50).passed());
}

TEST_CASE("p1 theorem at the smallest bound: every region cell is terminal") {
    const VerificationReport r = verify_p1_theorem(2);
    CHECK(r.passed());
    CHECK(r.checked_count == 6);
}

TEST_CASE("misère theorem") {
    const VerificationReport r8 = verify_misere_theorem(8);
    CHECK(r8.passed());
    CHECK(r8.checked_count == 45);
    CHECK(verify_misere_theorem(60).passed());
    CHECK_THROWS_AS(verify_misere_theorem(4), std::domain_error);
}

TEST_CASE("grundy-one theorem") {
    const VerificationReport r = verify_grundy_one_theorem(40);
    CHECK(r.passed());
    // only cells outside the 8x8 corner carry the claim
    std::uint64_t expect = 0;
    for (std::uint64_t x = 0; x <= 40; ++x) {
        for (std::uint64_t y = 0; x + y <= 40; ++y) {
            if (x >= 8 || y >= 8) {
                ++expect;
            }
        }
    }
    CHECK(r.checked_count == expect);
}

TEST_CASE("sum theorem") {
    const VerificationReport r = verify_sum_theorem(24);
    CHECK(r.passed());
    CHECK(r.checked_count == 2 * (25 * 26 / 2));  // both z layers of the region
}

TEST_CASE("sequence claims pass at a desk bound") {
    for (const VerificationReport& r : verify_sequences(2000)) {
        CAPTURE(r.claim_id);
        CHECK(r.passed());
    }
}

TEST_CASE("b1b2 structure reports an empty, stable intersection") {
    const VerificationReport r = verify_b1b2_structure(2000);
    CHECK(r.passed());
    CHECK(r.note.find(": {}") != std::string::npos);
}

TEST_CASE("p1 structural properties") {
    CHECK(verify_p1_no_self_reach(80).passed());
    CHECK(verify_p1_reachability(80).passed());
}

TEST_CASE("solver consistency claims") {
    CHECK(verify_grundy_outcome(48).passed());
    CHECK(verify_solver_fixpoint(24).passed());
    CHECK(verify_sum_grundy(32).passed());
}

TEST_CASE("registry ids are unique and runnable") {
    std::set<std::string> ids;
    for (const ClaimSpec& c : claim_registry()) {
        CHECK(ids.insert(c.id).second);
        CHECK(c.min_bound >= 2);
        CHECK(c.min_bound <= 8);
    }
    const auto reports = run_claims({"p1-theorem", "gap-bounds"}, 12);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].claim_id == "p1-theorem");
    CHECK(reports[1].claim_id == "gap-bounds");
    CHECK(reports[0].passed());
    CHECK(reports[1].passed());
}

TEST_CASE("run_claims rejects bad input") {
    CHECK_THROWS_AS(run_claims({"no-such-claim"}, 16), std::invalid_argument);
    CHECK_THROWS_AS(run_claims({"misere-theorem"}, 4), std::domain_error);
}

TEST_CASE("serialization format and determinism") {
    VerificationReport r;
    r.claim_id = "demo";
    r.bound = 10;
    r.checked_count = 66;
    r.mismatch_count = 2;
    r.mismatches = {{"(1,2)", "P", "N"}, {"(3,4)", "N", "P"}};
    r.note = "descriptive text";
    const std::string expect =
        "demo bound=10 checked=66 mismatches=2 result=FAIL\n"
        "  mismatch (1,2) expected=P actual=N\n"
        "  mismatch (3,4) expected=N actual=P\n"
        "  note descriptive text\n";
    CHECK(serialize_report(r) == expect);
    CHECK(serialize_report(r) == serialize_report(r));

    const VerificationReport a = verify_p1_theorem(20);
    const VerificationReport b = verify_p1_theorem(20);
    CHECK(serialize_report(a) == serialize_report(b));
}
