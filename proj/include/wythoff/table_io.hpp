#pragma once

#include <string>

#include "wythoff/solver.hpp"

namespace wythoff {

// Serialization of solved tables. CSV is the canonical interchange format:
// UTF-8, LF line endings, a header row, rows in row-major order (x outer,
// y inner, z innermost for the sum game), outcomes as the letters P/N and
// Grundy values in decimal. JSON carries the same payload in a dense
// row-major array plus metadata. Output is deterministic: no timestamps,
// stable ordering.

std::string to_csv(const OutcomeTable& table);
std::string to_csv(const GrundyTable& table);
std::string to_csv(const SumOutcomeTable& table);

std::string to_json(const OutcomeTable& table, const std::string& game_name);
std::string to_json(const GrundyTable& table, const std::string& game_name);
std::string to_json(const SumOutcomeTable& table, const std::string& game_name);

// Re-parse CSV produced by to_csv and compare against a live table,
// cell by cell. Throws std::invalid_argument on malformed input.
bool csv_round_trips(const OutcomeTable& table, const std::string& csv);
bool csv_round_trips(const GrundyTable& table, const std::string& csv);
bool csv_round_trips(const SumOutcomeTable& table, const std::string& csv);

}  // namespace wythoff
