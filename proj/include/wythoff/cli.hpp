#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wythoff/chart.hpp"

namespace wythoff {

// Command-line front end. Exit code contract:
//   0 success / everything verified
//   1 verification mismatch
//   2 usage error
//   3 resource or I/O error

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

// seq <name> <count>: first `count` values of a sequence, one "index,value"
// line each. Names: lower-wythoff, upper-wythoff, hofstadter-g, g, f, b1, b2.
// f starts at index 1 (it has no value at 0), everything else at 0.
int cmd_seq(const std::string& name, std::uint64_t count, std::ostream& out, std::ostream& err);

struct SolveOptions {
    std::string game;         // wythoff | variant | variant-misere | variant-plus-nim
    std::uint32_t bound = 0;  // board bound N
    std::string output_kind;  // outcomes | grundy
    std::string format = "csv";
    std::string out_path;     // empty: stdout
};

int cmd_solve(const SolveOptions& options, std::ostream& out, std::ostream& err);

struct VerifyOptions {
    std::string claim;  // registered claim id or "all"
    std::uint64_t bound = 0;
    std::size_t max_mismatches = 100;
};

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

struct ChartOptions {
    ChartSpec spec;
    std::string out_path;
};

int cmd_chart(const ChartOptions& options, std::ostream& err);

// Full argv dispatch (used by the binary; exposed for tests).
int run_cli(int argc, const char* const* argv);

}  // namespace wythoff
