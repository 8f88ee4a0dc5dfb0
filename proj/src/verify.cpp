#include "wythoff/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "wythoff/beatty.hpp"
#include "wythoff/closedform.hpp"
#include "wythoff/hofstadter.hpp"
#include "wythoff/solver.hpp"

namespace wythoff {

namespace {

class ReportBuilder {
public:
    ReportBuilder(std::string id, std::uint64_t bound, std::size_t cap) : cap_(cap) {
        report_.claim_id = std::move(id);
        report_.bound = bound;
    }

    void checked(std::uint64_t n = 1) { report_.checked_count += n; }

    void mismatch(std::string location, std::string expected, std::string actual) {
        ++report_.mismatch_count;
        if (report_.mismatches.size() < cap_) {
            report_.mismatches.push_back(
                {std::move(location), std::move(expected), std::move(actual)});
        }
    }

    void note(std::string text) { report_.note = std::move(text); }

    VerificationReport finish() { return std::move(report_); }

private:
    VerificationReport report_;
    std::size_t cap_;
};

std::string cell_str(std::uint64_t x, std::uint64_t y) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

std::string cell_str(std::uint64_t x, std::uint64_t y, unsigned z) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

std::string index_str(std::uint64_t n) { return "n=" + std::to_string(n); }

void require_min_bound(const char* fn, std::uint64_t bound, std::uint64_t min_bound) {
    if (bound < min_bound) {
        throw std::domain_error(std::string(fn) + ": bound " + std::to_string(bound) +
                                " is below the minimum " + std::to_string(min_bound));
    }
}

// Sweep all cells with x + y <= bound.
template <typename Fn>
void for_each_region_cell(std::uint32_t bound, Fn&& fn) {
    for (std::uint64_t x = 0; x <= bound; ++x) {
        for (std::uint64_t y = 0; x + y <= bound; ++y) {
            fn(x, y);
        }
    }
}

bool in_set(const std::vector<Position>& set, Position p) {
    return std::find(set.begin(), set.end(), p) != set.end();
}

}  // namespace

std::string serialize_report(const VerificationReport& report) {
    std::ostringstream out;
    out << report.claim_id << " bound=" << report.bound << " checked=" << report.checked_count
        << " mismatches=" << report.mismatch_count << " result="
        << (report.passed() ? "pass" : "FAIL") << "\n";
    for (const Mismatch& m : report.mismatches) {
        out << "  mismatch " << m.location << " expected=" << m.expected
            << " actual=" << m.actual << "\n";
    }
    if (!report.note.empty()) {
        out << "  note " << report.note << "\n";
    }
    return out.str();
}

VerificationReport verify_p1_theorem(std::uint32_t bound, std::size_t mismatch_cap) {
    require_min_bound("verify_p1_theorem", bound, 2);
    ReportBuilder rb("p1-theorem", bound, mismatch_cap);
    const OutcomeTable oracle = solve_outcomes({2, Convention::Normal}, bound);
    for_each_region_cell(bound, [&](std::uint64_t x, std::uint64_t y) {
        rb.checked();
        const bool predicted = p1_contains({x, y});
        const bool solved = oracle.is_p(x, y);
        if (predicted != solved) {
            rb.mismatch(cell_str(x, y), predicted ? "P" : "N", solved ? "P" : "N");
        }
    });
    return rb.finish();
}

VerificationReport verify_misere_theorem(std::uint32_t bound, std::size_t mismatch_cap) {
    require_min_bound("verify_misere_theorem", bound, 8);
    ReportBuilder rb("misere-theorem", bound, mismatch_cap);
    const OutcomeTable oracle = solve_outcomes({2, Convention::Misere}, bound);
    for_each_region_cell(bound, [&](std::uint64_t x, std::uint64_t y) {
        rb.checked();
        const bool predicted =
            (x <= 7 && y <= 7) ? in_set(set_b(), {x, y}) : p0_contains({x, y});
        const bool solved = oracle.is_p(x, y);
        if (predicted != solved) {
            rb.mismatch(cell_str(x, y), predicted ? "P" : "N", solved ? "P" : "N");
        }
    });
    return rb.finish();
}

VerificationReport verify_grundy_one_theorem(std::uint32_t bound, std::size_t mismatch_cap) {
    require_min_bound("verify_grundy_one_theorem", bound, 8);
    ReportBuilder rb("grundy-one-theorem", bound, mismatch_cap);
    const GrundyTable grundy = solve_grundy({2, Convention::Normal}, bound);
    for_each_region_cell(bound, [&](std::uint64_t x, std::uint64_t y) {
        if (x < 8 && y < 8) {
            return;
        }
        rb.checked();
        const bool predicted = p0_contains({x, y});
        const bool is_one = grundy.at(x, y) == 1;
        if (predicted != is_one) {
            rb.mismatch(cell_str(x, y), predicted ? "1" : "!=1",
                        std::to_string(grundy.at(x, y)));
        }
    });
    return rb.finish();
}

VerificationReport verify_sum_theorem(std::uint32_t bound, std::size_t mismatch_cap) {
    require_min_bound("verify_sum_theorem", bound, 8);
    ReportBuilder rb("sum-theorem", bound, mismatch_cap);
    const SumOutcomeTable oracle = solve_sum_outcomes(bound);
    for_each_region_cell(bound, [&](std::uint64_t x, std::uint64_t y) {
        for (std::uint8_t z = 0; z <= 1; ++z) {
            rb.checked();
            const bool predicted = p4_contains({x, y, z});
            const bool solved = oracle.is_p(x, y, z);
            if (predicted != solved) {
                rb.mismatch(cell_str(x, y, z), predicted ? "P" : "N", solved ? "P" : "N");
            }
        }
    });
    // The corner slice must also equal the literal sets exactly.
    const std::vector<SumPosition> a_star = set_a_star();
    const std::vector<SumPosition> b_star = set_b_star();
    for (std::uint64_t x = 0; x <= 7; ++x) {
        for (std::uint64_t y = 0; y <= 7; ++y) {
            if (x + y > bound) {
                continue;  // stay inside the border-independent region
            }
            for (std::uint8_t z = 0; z <= 1; ++z) {
                const SumPosition p{x, y, z};
                const bool literal = std::find(a_star.begin(), a_star.end(), p) != a_star.end() ||
                                     std::find(b_star.begin(), b_star.end(), p) != b_star.end();
                const bool solved = oracle.is_p(x, y, z);
                if (literal != solved) {
                    rb.mismatch("slice" + cell_str(x, y, z), literal ? "P" : "N",
                                solved ? "P" : "N");
                }
            }
        }
    }
    return rb.finish();
}

VerificationReport verify_h_closed_form(std::uint64_t bound, std::size_t mismatch_cap) {
    require_min_bound("verify_h_closed_form", bound, 2);
    ReportBuilder rb("h-closed-form", bound, mismatch_cap);
    HTable h;
    h.ensure(bound);
    for (std::uint64_t n = 0; n <= bound; ++n) {
        rb.checked();
        const std::uint64_t closed = h_closed(n);
        if (h.at(n) != closed) {
            rb.mismatch(index_str(n), std::to_string(closed), std::to_string(h.at(n)));
        }
    }
    return rb.finish();
}

VerificationReport verify_g_equivalence(std::uint64_t bound, std::size_t mismatch_cap) {
    require_min_bound("verify_g_equivalence", bound, 2);
    ReportBuilder rb("g-hofstadter", bound, mismatch_cap);
    GTable direct;
    GHofstadterTable via_h;
    direct.ensure(bound);
    via_h.ensure(bound);
    for (std::uint64_t n = 0; n <= bound; ++n) {
        rb.checked();
        if (direct.at(n) != via_h.at(n)) {
            rb.mismatch(index_str(n), std::to_string(int(via_h.at(n))),
                        std::to_string(int(direct.at(n))));
        }
    }
    return rb.finish();
}

VerificationReport verify_f_bridge(std::uint64_t bound, std::size_t mismatch_cap) {
    require_min_bound("verify_f_bridge", bound, 2);
    ReportBuilder rb("f-bridge", bound, mismatch_cap);
    HTable h;
    h.ensure(bound);
    std::uint64_t prev = f(1);
    for (std::uint64_t n = 2; n <= bound; ++n) {
        rb.checked();
        const std::uint64_t cur = f(n);
        if (cur != prev && cur != prev + 1) {
            rb.mismatch(index_str(n), "f step in {0,1}", std::to_string(cur - prev));
        }
        const bool increased = cur > prev;
        const bool member = upper_index_of(lower_wythoff(n) - 1).has_value();
        if (increased != member) {
            rb.mismatch(index_str(n), increased ? "upper member below lower(n)" : "no member",
                        member ? "member" : "none");
        }
        if (increased && cur != h.at(n - 1)) {
            rb.mismatch(index_str(n), "f(n)=h(n-1)=" + std::to_string(h.at(n - 1)),
                        std::to_string(cur));
        }
        prev = cur;
    }
    return rb.finish();
}

VerificationReport verify_rayleigh_partition(std::uint64_t bound, std::size_t mismatch_cap) {
    require_min_bound("verify_rayleigh_partition", bound, 2);
    ReportBuilder rb("rayleigh-partition", bound, mismatch_cap);
    // Both sequences are strictly increasing from index 1 on, so merging
    // them must produce exactly 1, 2, ..., bound, each value once.
    std::uint64_t i = 1;  // next lower index
    std::uint64_t j = 1;  // next upper index
    std::uint64_t li = lower_wythoff(i);
    std::uint64_t uj = upper_wythoff(j);
    for (std::uint64_t v = 1; v <= bound; ++v) {
        rb.checked();
        const bool from_lower = li == v;
        const bool from_upper = uj == v;
        if (from_lower == from_upper) {
            rb.mismatch("v=" + std::to_string(v), "exactly one sequence",
                        from_lower ? "both" : "neither");
        }
        if (from_lower) {
            li = lower_wythoff(++i);
        }
        if (from_upper) {
            uj = upper_wythoff(++j);
        }
    }
    return rb.finish();
}

VerificationReport verify_gap_bounds(std::uint64_t bound, std::size_t mismatch_cap) {
    require_min_bound("verify_gap_bounds", bound, 2);
    ReportBuilder rb("gap-bounds", bound, mismatch_cap);
    for (std::uint64_t n = 0; n + 2 <= bound; ++n) {
        rb.checked();
        const std::uint64_t g1 = lower_wythoff(n + 1) - lower_wythoff(n);
        const std::uint64_t g2 = lower_wythoff(n + 2) - lower_wythoff(n);
        const std::uint64_t gu = upper_wythoff(n + 1) - upper_wythoff(n);
        if (g1 != 1 && g1 != 2) {
            rb.mismatch(index_str(n), "lower gap in {1,2}", std::to_string(g1));
        }
        if (g2 != 3 && g2 != 4) {
            rb.mismatch(index_str(n), "lower 2-gap in {3,4}", std::to_string(g2));
        }
        if (gu != 2 && gu != 3) {
            rb.mismatch(index_str(n), "upper gap in {2,3}", std::to_string(gu));
        }
    }
    return rb.finish();
}

VerificationReport verify_triple_classification(std::uint64_t bound, std::size_t mismatch_cap) {
    require_min_bound("verify_triple_classification", bound, 2);
    ReportBuilder rb("triple-classification", bound, mismatch_cap);
    for (std::uint64_t n = 2; n <= bound; ++n) {
        rb.checked();
        const ConsecutiveTriple t = classify_triple(n);
        const std::uint64_t ln = lower_wythoff(n);
        const std::uint64_t gap = ln - lower_wythoff(n - 1);
        // The gap decides the case, so exactly one of the two applies.
        if (gap == 2) {
            if (t.tag != TripleCase::UpperMiddle || upper_wythoff(t.m) != ln - 1) {
                rb.mismatch(index_str(n), "UpperMiddle with upper(m)=lower(n)-1",
                            t.tag == TripleCase::UpperMiddle ? "bad witness" : "UpperFirst");
            }
        } else if (gap == 1) {
            if (t.tag != TripleCase::UpperFirst || upper_wythoff(t.m) != ln - 2) {
                rb.mismatch(index_str(n), "UpperFirst with upper(m)=lower(n)-2",
                            t.tag == TripleCase::UpperFirst ? "bad witness" : "UpperMiddle");
            }
        } else {
            rb.mismatch(index_str(n), "gap in {1,2}", std::to_string(gap));
        }
    }
    return rb.finish();
}

VerificationReport verify_b1b2_structure(std::uint64_t bound, std::size_t mismatch_cap) {
    require_min_bound("verify_b1b2_structure", bound, 2);
    ReportBuilder rb("b1b2-structure", bound, mismatch_cap);

    // One pass computes coverage and intersection of {b1}, {b2} up to a
    // limit by merging the two (eventually strictly increasing) sequences.
    const auto scan = [&](std::uint64_t limit, bool record) {
        std::set<std::uint64_t> intersection;
        std::uint64_t i = 1;  // b1(0) == b1(1) == 0, start the walk at 1
        std::uint64_t j = 0;
        std::uint64_t vi = b1(i);
        std::uint64_t vj = b2(j);
        for (std::uint64_t v = 0; v <= limit; ++v) {
            const bool in_b1 = (v == 0) || vi == v;  // v==0 is b1(0)
            const bool in_b2 = vj == v;
            if (record) {
                rb.checked();
                if (!in_b1 && !in_b2) {
                    rb.mismatch("v=" + std::to_string(v), "covered by b1 or b2", "neither");
                }
            }
            if (in_b1 && in_b2) {
                intersection.insert(v);
            }
            while (vi <= v) {
                vi = b1(++i);
            }
            while (vj <= v) {
                vj = b2(++j);
            }
        }
        return intersection;
    };

    // Strict growth: b2 from n >= 1, b1 from n >= 2. The single flat step
    // b1(0) == b1(1) is a fact of the definition, recorded below.
    std::uint64_t max_n = 0;
    while (b2(max_n) <= bound) {
        ++max_n;
    }
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        rb.checked();
        if (b2(n - 1) >= b2(n)) {
            rb.mismatch(index_str(n), "b2(n-1) < b2(n)",
                        std::to_string(b2(n - 1)) + " >= " + std::to_string(b2(n)));
        }
        if (n >= 2 && b1(n - 1) >= b1(n)) {
            rb.mismatch(index_str(n), "b1(n-1) < b1(n)",
                        std::to_string(b1(n - 1)) + " >= " + std::to_string(b1(n)));
        }
    }

    const std::set<std::uint64_t> full = scan(bound, true);
    const std::set<std::uint64_t> tenth = scan(std::max<std::uint64_t>(bound / 10, 2), false);
    const std::set<std::uint64_t> hundredth = scan(std::max<std::uint64_t>(bound / 100, 2), false);
    if (full != tenth || tenth != hundredth) {
        rb.mismatch("intersection", "stable across bounds", "varies with bound");
    }

    std::string inter = "{";
    for (std::uint64_t v : full) {
        if (inter.size() > 1) {
            inter += ",";
        }
        inter += std::to_string(v);
    }
    inter += "}";
    rb.note("b1(0)==b1(1)==0 (strict growth holds from n>=1 for b2, n>=2 for b1); "
            "computed intersection up to " +
            std::to_string(bound) + ": " + inter);
    return rb.finish();
}

VerificationReport verify_moveset_window(std::uint32_t bound, std::size_t mismatch_cap) {
    require_min_bound("verify_moveset_window", bound, 8);
    ReportBuilder rb("moveset-window", bound, mismatch_cap);
    const std::vector<Position>& b = set_b();
    const std::vector<Position>& c = set_c();

    const auto hits = [](const std::vector<Position>& set, std::uint64_t x, std::uint64_t y,
                         int direction) {
        for (Position s : set) {
            switch (direction) {
                case 1:  // horizontal: same y, smaller x
                    if (s.y == y && s.x < x) {
                        return true;
                    }
                    break;
                case 2:  // vertical: same x, smaller y
                    if (s.x == x && s.y < y) {
                        return true;
                    }
                    break;
                default:  // diagonal: equal positive offsets
                    if (s.x < x && s.y < y && x - s.x == y - s.y) {
                        return true;
                    }
                    break;
            }
        }
        return false;
    };

    for (std::uint64_t x = 0; x <= bound; ++x) {
        for (std::uint64_t y = 0; y <= bound; ++y) {
            if (x <= 7 && y <= 7) {
                continue;
            }
            rb.checked();
            for (int dir = 1; dir <= 3; ++dir) {
                const bool hb = hits(b, x, y, dir);
                const bool hc = hits(c, x, y, dir);
                if (hb != hc) {
                    rb.mismatch("M" + std::to_string(dir) + cell_str(x, y),
                                hb ? "B hit implies C hit" : "C hit implies B hit",
                                "one-sided");
                }
            }
        }
    }
    return rb.finish();
}

std::vector<VerificationReport> verify_sequences(std::uint64_t bound, std::size_t mismatch_cap) {
    std::vector<VerificationReport> out;
    out.push_back(verify_h_closed_form(bound, mismatch_cap));
    out.push_back(verify_g_equivalence(bound, mismatch_cap));
    out.push_back(verify_f_bridge(bound, mismatch_cap));
    out.push_back(verify_rayleigh_partition(bound, mismatch_cap));
    out.push_back(verify_gap_bounds(bound, mismatch_cap));
    out.push_back(verify_triple_classification(bound, mismatch_cap));
    out.push_back(verify_b1b2_structure(bound, mismatch_cap));
    const auto window_bound =
        static_cast<std::uint32_t>(std::min<std::uint64_t>(bound, 1024));
    out.push_back(verify_moveset_window(std::max<std::uint32_t>(window_bound, 8), mismatch_cap));
    return out;
}

VerificationReport verify_p1_no_self_reach(std::uint32_t bound, std::size_t mismatch_cap) {
    require_min_bound("verify_p1_no_self_reach", bound, 2);
    ReportBuilder rb("p1-no-self-reach", bound, mismatch_cap);
    const Ruleset r{2, Convention::Normal};
    for_each_region_cell(bound, [&](std::uint64_t x, std::uint64_t y) {
        const Position p{x, y};
        if (!p1_contains(p)) {
            return;
        }
        rb.checked();
        for_each_move(p, r, [&](Position q) {
            if (p1_contains(q)) {
                rb.mismatch(cell_str(x, y) + "->" + cell_str(q.x, q.y),
                            "no move between members", "move found");
            }
            return true;
        });
    });
    return rb.finish();
}

VerificationReport verify_p1_reachability(std::uint32_t bound, std::size_t mismatch_cap) {
    require_min_bound("verify_p1_reachability", bound, 2);
    ReportBuilder rb("p1-reachability", bound, mismatch_cap);
    const Ruleset r{2, Convention::Normal};
    for_each_region_cell(bound, [&](std::uint64_t x, std::uint64_t y) {
        const Position p{x, y};
        if (p1_contains(p)) {
            return;
        }
        rb.checked();
        bool found = false;
        for_each_move(p, r, [&](Position q) {
            if (p1_contains(q)) {
                found = true;
                return false;
            }
            return true;
        });
        if (!found) {
            rb.mismatch(cell_str(x, y), "a move into the member set", "none");
        }
    });
    return rb.finish();
}

VerificationReport verify_grundy_outcome(std::uint32_t bound, std::size_t mismatch_cap) {
    require_min_bound("verify_grundy_outcome", bound, 2);
    ReportBuilder rb("grundy-outcome", bound, mismatch_cap);
    for (std::uint64_t threshold : {std::uint64_t{0}, std::uint64_t{2}}) {
        const Ruleset r{threshold, Convention::Normal};
        const OutcomeTable outcomes = solve_outcomes(r, bound);
        const GrundyTable grundy = solve_grundy(r, bound);
        for_each_region_cell(bound, [&](std::uint64_t x, std::uint64_t y) {
            rb.checked();
            const bool zero = grundy.at(x, y) == 0;
            const bool p = outcomes.is_p(x, y);
            if (zero != p) {
                rb.mismatch("t=" + std::to_string(threshold) + " " + cell_str(x, y),
                            p ? "value 0" : "value != 0", std::to_string(grundy.at(x, y)));
            }
        });
    }
    return rb.finish();
}

VerificationReport verify_solver_fixpoint(std::uint32_t bound, std::size_t mismatch_cap) {
    require_min_bound("verify_solver_fixpoint", bound, 2);
    ReportBuilder rb("solver-fixpoint", bound, mismatch_cap);
    const auto absorb = [&](const char* label, const FixpointReport& fp) {
        rb.checked(fp.cells_checked);
        if (fp.violations != 0) {
            rb.mismatch(label, "0 violations", std::to_string(fp.violations));
        }
    };
    for (std::uint64_t threshold : {std::uint64_t{0}, std::uint64_t{2}}) {
        const std::string t = std::to_string(threshold);
        absorb(("outcomes t=" + t + " normal").c_str(),
               verify_fixpoint(solve_outcomes({threshold, Convention::Normal}, bound)));
        absorb(("outcomes t=" + t + " misere").c_str(),
               verify_fixpoint(solve_outcomes({threshold, Convention::Misere}, bound)));
        absorb(("grundy t=" + t).c_str(),
               verify_fixpoint(solve_grundy({threshold, Convention::Normal}, bound)));
    }
    absorb("sum", verify_fixpoint(solve_sum_outcomes(bound)));
    return rb.finish();
}

VerificationReport verify_sum_grundy(std::uint32_t bound, std::size_t mismatch_cap) {
    require_min_bound("verify_sum_grundy", bound, 2);
    ReportBuilder rb("sum-grundy", bound, mismatch_cap);
    const SumOutcomeTable sum = solve_sum_outcomes(bound);
    const GrundyTable grundy = solve_grundy({2, Convention::Normal}, bound);
    for_each_region_cell(bound, [&](std::uint64_t x, std::uint64_t y) {
        for (std::uint8_t z = 0; z <= 1; ++z) {
            rb.checked();
            const bool predicted = grundy.at(x, y) == z;
            const bool solved = sum.is_p(x, y, z);
            if (predicted != solved) {
                rb.mismatch(cell_str(x, y, z), predicted ? "P" : "N", solved ? "P" : "N");
            }
        }
    });
    return rb.finish();
}

const std::vector<ClaimSpec>& claim_registry() {
    static const std::vector<ClaimSpec> registry = {
        {"p1-theorem", 2},         {"misere-theorem", 8},
        {"grundy-one-theorem", 8}, {"sum-theorem", 8},
        {"h-closed-form", 2},      {"g-hofstadter", 2},
        {"f-bridge", 2},           {"rayleigh-partition", 2},
        {"gap-bounds", 2},         {"triple-classification", 2},
        {"b1b2-structure", 2},     {"moveset-window", 8},
        {"p1-no-self-reach", 2},   {"p1-reachability", 2},
        {"grundy-outcome", 2},     {"solver-fixpoint", 2},
        {"sum-grundy", 2},
    };
    return registry;
}

std::vector<VerificationReport> run_claims(const std::vector<std::string>& ids,
                                           std::uint64_t bound,
                                           std::size_t mismatch_cap) {
    const auto as_board = [&]() {
        if (bound > 0xFFFFFFFFULL) {
            throw std::domain_error("bound " + std::to_string(bound) +
                                    " is too large for a board-sweep claim");
        }
        return static_cast<std::uint32_t>(bound);
    };
    std::vector<VerificationReport> out;
    for (const std::string& id : ids) {
        const auto it = std::find_if(claim_registry().begin(), claim_registry().end(),
                                     [&](const ClaimSpec& c) { return c.id == id; });
        if (it == claim_registry().end()) {
            throw std::invalid_argument("unknown claim id: " + id);
        }
        if (bound < it->min_bound) {
            throw std::domain_error("claim " + id + " requires bound >= " +
                                    std::to_string(it->min_bound));
        }
        if (id == "p1-theorem") {
            out.push_back(verify_p1_theorem(as_board(), mismatch_cap));
        } else if (id == "misere-theorem") {
            out.push_back(verify_misere_theorem(as_board(), mismatch_cap));
        } else if (id == "grundy-one-theorem") {
            out.push_back(verify_grundy_one_theorem(as_board(), mismatch_cap));
        } else if (id == "sum-theorem") {
            out.push_back(verify_sum_theorem(as_board(), mismatch_cap));
        } else if (id == "h-closed-form") {
            out.push_back(verify_h_closed_form(bound, mismatch_cap));
        } else if (id == "g-hofstadter") {
            out.push_back(verify_g_equivalence(bound, mismatch_cap));
        } else if (id == "f-bridge") {
            out.push_back(verify_f_bridge(bound, mismatch_cap));
        } else if (id == "rayleigh-partition") {
            out.push_back(verify_rayleigh_partition(bound, mismatch_cap));
        } else if (id == "gap-bounds") {
            out.push_back(verify_gap_bounds(bound, mismatch_cap));
        } else if (id == "triple-classification") {
            out.push_back(verify_triple_classification(bound, mismatch_cap));
        } else if (id == "b1b2-structure") {
            out.push_back(verify_b1b2_structure(bound, mismatch_cap));
        } else if (id == "moveset-window") {
            out.push_back(verify_moveset_window(as_board(), mismatch_cap));
        } else if (id == "p1-no-self-reach") {
            out.push_back(verify_p1_no_self_reach(as_board(), mismatch_cap));
        } else if (id == "p1-reachability") {
            out.push_back(verify_p1_reachability(as_board(), mismatch_cap));
        } else if (id == "grundy-outcome") {
            out.push_back(verify_grundy_outcome(as_board(), mismatch_cap));
        } else if (id == "solver-fixpoint") {
            out.push_back(verify_solver_fixpoint(as_board(), mismatch_cap));
        } else if (id == "sum-grundy") {
            out.push_back(verify_sum_grundy(as_board(), mismatch_cap));
        }
    }
    return out;
}

}  // namespace wythoff
