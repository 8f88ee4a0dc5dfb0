#include "wythoff/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <new>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "wythoff/beatty.hpp"
#include "wythoff/closedform.hpp"
#include "wythoff/hofstadter.hpp"
#include "wythoff/solver.hpp"
#include "wythoff/table_io.hpp"
#include "wythoff/verify.hpp"

namespace wythoff {

namespace {

// Solved tables are dense; refuse anything that would not fit comfortably.
constexpr std::uint64_t kMemoryCapBytes = std::uint64_t{1} << 30;

std::uint64_t estimated_bytes(const std::string& game, const std::string& kind,
                              std::uint32_t bound) {
    using u128 = unsigned __int128;
    const u128 cells = (u128{bound} + 1) * (u128{bound} + 1);
    u128 bytes;
    if (kind == "grundy") {
        bytes = cells * 2;
    } else {
        bytes = game == "variant-plus-nim" ? cells / 4 + 16 : cells / 8 + 8;
    }
    return bytes > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(bytes);
}

bool write_output(const std::string& path, const std::string& payload, std::ostream& out,
                  std::ostream& err) {
    if (path.empty()) {
        out << payload;
        return true;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << payload) || !file.flush()) {
        err << "error: cannot write " << path << "\n";
        return false;
    }
    return true;
}

}  // namespace

int cmd_seq(const std::string& name, std::uint64_t count, std::ostream& out, std::ostream& err) {
    if (count < 1) {
        err << "error: count must be >= 1\n";
        return kExitUsage;
    }
    std::function<std::uint64_t(std::uint64_t)> value;
    std::uint64_t first = 0;
    if (name == "lower-wythoff") {
        value = lower_wythoff;
    } else if (name == "upper-wythoff") {
        value = upper_wythoff;
    } else if (name == "hofstadter-g") {
        value = h;
    } else if (name == "g") {
        value = [](std::uint64_t n) { return std::uint64_t{g(n)}; };
    } else if (name == "f") {
        value = f;
        first = 1;
    } else if (name == "b1") {
        value = b1;
    } else if (name == "b2") {
        value = b2;
    } else {
        err << "error: unknown sequence '" << name
            << "' (try lower-wythoff, upper-wythoff, hofstadter-g, g, f, b1, b2)\n";
        return kExitUsage;
    }
    for (std::uint64_t i = first; i < first + count; ++i) {
        out << i << ',' << value(i) << '\n';
    }
    return kExitOk;
}

int cmd_solve(const SolveOptions& options, std::ostream& out, std::ostream& err) {
    Ruleset ruleset;
    bool sum_game = false;
    if (options.game == "wythoff") {
        ruleset = {0, Convention::Normal};
    } else if (options.game == "variant") {
        ruleset = {2, Convention::Normal};
    } else if (options.game == "variant-misere") {
        ruleset = {2, Convention::Misere};
    } else if (options.game == "variant-plus-nim") {
        sum_game = true;
    } else {
        err << "error: unknown game '" << options.game << "'\n";
        return kExitUsage;
    }
    if (options.output_kind != "outcomes" && options.output_kind != "grundy") {
        err << "error: output kind must be outcomes or grundy\n";
        return kExitUsage;
    }
    if (options.format != "csv" && options.format != "json") {
        err << "error: format must be csv or json\n";
        return kExitUsage;
    }
    if (options.output_kind == "grundy" && (sum_game || ruleset.convention == Convention::Misere)) {
        err << "error: grundy output is only available for wythoff and variant\n";
        return kExitUsage;
    }
    if (estimated_bytes(options.game, options.output_kind, options.bound) > kMemoryCapBytes) {
        err << "error: board bound " << options.bound << " needs more memory than the "
            << (kMemoryCapBytes >> 20) << " MiB cap\n";
        return kExitResource;
    }

    try {
        std::string payload;
        if (sum_game) {
            const SumOutcomeTable table = solve_sum_outcomes(options.bound);
            payload = options.format == "csv" ? to_csv(table) : to_json(table, options.game);
        } else if (options.output_kind == "grundy") {
            const GrundyTable table = solve_grundy(ruleset, options.bound);
            payload = options.format == "csv" ? to_csv(table) : to_json(table, options.game);
        } else {
            const OutcomeTable table = solve_outcomes(ruleset, options.bound);
            payload = options.format == "csv" ? to_csv(table) : to_json(table, options.game);
        }
        return write_output(options.out_path, payload, out, err) ? kExitOk : kExitResource;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory solving bound " << options.bound << "\n";
        return kExitResource;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitResource;
    }
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
    std::vector<std::string> ids;
    if (options.claim == "all") {
        for (const ClaimSpec& claim : claim_registry()) {
            ids.push_back(claim.id);
        }
    } else {
        ids.push_back(options.claim);
    }
    try {
        const auto reports = run_claims(ids, options.bound, options.max_mismatches);
        bool all_passed = true;
        for (const VerificationReport& report : reports) {
            out << serialize_report(report);
            all_passed = all_passed && report.passed();
        }
        return all_passed ? kExitOk : kExitMismatch;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory at bound " << options.bound << "\n";
        return kExitResource;
    }
}

int cmd_chart(const ChartOptions& options, std::ostream& err) {
    if (options.out_path.empty()) {
        err << "error: chart needs an output path\n";
        return kExitUsage;
    }
    std::string svg;
    try {
        svg = render_chart_svg(options.spec);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitResource;
    }
    std::ofstream file(options.out_path, std::ios::binary);
    if (!file || !(file << svg) || !file.flush()) {
        err << "error: cannot write " << options.out_path << "\n";
        return kExitResource;
    }
    return kExitOk;
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"solver and verification tool for Wythoff-style corner games"};
    app.require_subcommand(1);

    std::string seq_name;
    std::uint64_t seq_count = 1;
    CLI::App* seq = app.add_subcommand("seq", "print the first values of a sequence");
    seq->add_option("name", seq_name, "sequence name")->required();
    seq->add_option("count", seq_count, "how many values")->required();

    SolveOptions solve_options;
    CLI::App* solve = app.add_subcommand("solve", "solve a bounded board and dump the table");
    solve->add_option("game", solve_options.game,
                      "wythoff | variant | variant-misere | variant-plus-nim")
        ->required();
    solve->add_option("N", solve_options.bound, "board bound")->required();
    solve->add_option("kind", solve_options.output_kind, "outcomes | grundy")->required();
    solve->add_option("--format", solve_options.format, "csv | json")
        ->default_val("csv");
    solve->add_option("--out", solve_options.out_path, "output file (default stdout)");

    VerifyOptions verify_options;
    CLI::App* verify = app.add_subcommand("verify", "run verification claims");
    verify->add_option("claim", verify_options.claim, "claim id or 'all'")->required();
    verify->add_option("N", verify_options.bound, "sweep bound")->required();
    verify->add_option("--max-mismatches", verify_options.max_mismatches,
                       "mismatch lines kept per claim")
        ->default_val(100);

    ChartOptions chart_options;
    std::vector<std::string> layer_args;
    CLI::App* chart = app.add_subcommand("chart", "render member sets as an SVG board");
    chart->add_option("--bound", chart_options.spec.bound, "board bound")->required();
    chart->add_option("--layer", layer_args, "SET:COLOR (repeatable; sets: p0 p1 p2 a b c)")
        ->required();
    chart->add_option("--cell-size", chart_options.spec.cell_size, "cell edge in pixels")
        ->default_val(16);
    chart->add_flag("--overlay", chart_options.spec.overlay, "blend overlapping layers");
    chart->add_option("--out", chart_options.out_path, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (seq->parsed()) {
        return cmd_seq(seq_name, seq_count, std::cout, std::cerr);
    }
    if (solve->parsed()) {
        return cmd_solve(solve_options, std::cout, std::cerr);
    }
    if (verify->parsed()) {
        return cmd_verify(verify_options, std::cout, std::cerr);
    }
    if (chart->parsed()) {
        for (const std::string& arg : layer_args) {
            const std::size_t colon = arg.find(':');
            if (colon == std::string::npos || colon == 0 || colon + 1 == arg.size()) {
                std::cerr << "error: layer '" << arg << "' is not SET:COLOR\n";
                return kExitUsage;
            }
            chart_options.spec.layers.push_back({arg.substr(0, colon), arg.substr(colon + 1)});
        }
        return cmd_chart(chart_options, std::cerr);
    }
    return kExitUsage;
}

}  // namespace wythoff
