#include "wythoff/table_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace wythoff {

namespace {

const char* convention_name(Convention c) {
    return c == Convention::Normal ? "normal" : "misere";
}

// Split a to_csv product into its cells: header plus one row per line.
struct CsvRow {
    std::vector<std::uint64_t> fields;  // x, y [, z]
    std::string value;
};

std::vector<CsvRow> parse_csv(const std::string& csv, const std::string& expected_header) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line != expected_header) {
        throw std::invalid_argument("csv: missing or unexpected header");
    }
    const std::size_t coord_fields =
        static_cast<std::size_t>(std::count(expected_header.begin(), expected_header.end(), ',') );
    std::vector<CsvRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        CsvRow row;
        std::size_t pos = 0;
        for (std::size_t i = 0; i < coord_fields; ++i) {
            const std::size_t comma = line.find(',', pos);
            if (comma == std::string::npos) {
                throw std::invalid_argument("csv: short row: " + line);
            }
            row.fields.push_back(std::stoull(line.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        row.value = line.substr(pos);
        if (row.value.empty() || row.value.find(',') != std::string::npos) {
            throw std::invalid_argument("csv: malformed value field: " + line);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string to_csv(const OutcomeTable& table) {
    std::ostringstream out;
    out << "x,y,value\n";
    const std::uint64_t n = table.board_bound();
    for (std::uint64_t x = 0; x <= n; ++x) {
        for (std::uint64_t y = 0; y <= n; ++y) {
            out << x << ',' << y << ',' << outcome_letter(table.at(x, y)) << '\n';
        }
    }
    return out.str();
}

std::string to_csv(const GrundyTable& table) {
    std::ostringstream out;
    out << "x,y,value\n";
    const std::uint64_t n = table.board_bound();
    for (std::uint64_t x = 0; x <= n; ++x) {
        for (std::uint64_t y = 0; y <= n; ++y) {
            out << x << ',' << y << ',' << table.at(x, y) << '\n';
        }
    }
    return out.str();
}

std::string to_csv(const SumOutcomeTable& table) {
    std::ostringstream out;
    out << "x,y,z,value\n";
    const std::uint64_t n = table.board_bound();
    for (std::uint64_t x = 0; x <= n; ++x) {
        for (std::uint64_t y = 0; y <= n; ++y) {
            for (std::uint8_t z = 0; z <= 1; ++z) {
                out << x << ',' << y << ',' << unsigned(z) << ','
                    << outcome_letter(table.at(x, y, z)) << '\n';
            }
        }
    }
    return out.str();
}

std::string to_json(const OutcomeTable& table, const std::string& game_name) {
    nlohmann::json j;
    j["game"] = game_name;
    j["board_bound"] = table.board_bound();
    j["terminal_threshold"] = table.ruleset().terminal_threshold;
    j["convention"] = convention_name(table.ruleset().convention);
    j["kind"] = "outcomes";
    auto& values = j["values"] = nlohmann::json::array();
    const std::uint64_t n = table.board_bound();
    for (std::uint64_t x = 0; x <= n; ++x) {
        for (std::uint64_t y = 0; y <= n; ++y) {
            values.push_back(table.is_p(x, y) ? "P" : "N");
        }
    }
    return j.dump();
}

std::string to_json(const GrundyTable& table, const std::string& game_name) {
    nlohmann::json j;
    j["game"] = game_name;
    j["board_bound"] = table.board_bound();
    j["terminal_threshold"] = table.ruleset().terminal_threshold;
    j["convention"] = convention_name(table.ruleset().convention);
    j["kind"] = "grundy";
    j["max_value"] = table.max_value();
    auto& values = j["values"] = nlohmann::json::array();
    const std::uint64_t n = table.board_bound();
    for (std::uint64_t x = 0; x <= n; ++x) {
        for (std::uint64_t y = 0; y <= n; ++y) {
            values.push_back(table.at(x, y));
        }
    }
    return j.dump();
}

std::string to_json(const SumOutcomeTable& table, const std::string& game_name) {
    nlohmann::json j;
    j["game"] = game_name;
    j["board_bound"] = table.board_bound();
    j["terminal_threshold"] = table.ruleset().terminal_threshold;
    j["convention"] = convention_name(table.ruleset().convention);
    j["kind"] = "outcomes";
    auto& values = j["values"] = nlohmann::json::array();
    const std::uint64_t n = table.board_bound();
    for (std::uint64_t x = 0; x <= n; ++x) {
        for (std::uint64_t y = 0; y <= n; ++y) {
            for (std::uint8_t z = 0; z <= 1; ++z) {
                values.push_back(table.is_p(x, y, z) ? "P" : "N");
            }
        }
    }
    return j.dump();
}

bool csv_round_trips(const OutcomeTable& table, const std::string& csv) {
    const auto rows = parse_csv(csv, "x,y,value");
    const std::uint64_t n = table.board_bound();
    if (rows.size() != (n + 1) * (n + 1)) {
        return false;
    }
    for (const CsvRow& row : rows) {
        if (row.fields[0] > n || row.fields[1] > n) {
            return false;
        }
        const char expect = outcome_letter(table.at(row.fields[0], row.fields[1]));
        if (row.value.size() != 1 || row.value[0] != expect) {
            return false;
        }
    }
    return true;
}

bool csv_round_trips(const GrundyTable& table, const std::string& csv) {
    const auto rows = parse_csv(csv, "x,y,value");
    const std::uint64_t n = table.board_bound();
    if (rows.size() != (n + 1) * (n + 1)) {
        return false;
    }
    for (const CsvRow& row : rows) {
        if (row.fields[0] > n || row.fields[1] > n) {
            return false;
        }
        if (std::stoull(row.value) != table.at(row.fields[0], row.fields[1])) {
            return false;
        }
    }
    return true;
}

bool csv_round_trips(const SumOutcomeTable& table, const std::string& csv) {
    const auto rows = parse_csv(csv, "x,y,z,value");
    const std::uint64_t n = table.board_bound();
    if (rows.size() != (n + 1) * (n + 1) * 2) {
        return false;
    }
    for (const CsvRow& row : rows) {
        if (row.fields[0] > n || row.fields[1] > n || row.fields[2] > 1) {
            return false;
        }
        const char expect = outcome_letter(
            table.at(row.fields[0], row.fields[1], static_cast<std::uint8_t>(row.fields[2])));
        if (row.value.size() != 1 || row.value[0] != expect) {
            return false;
        }
    }
    return true;
}

}  // namespace wythoff
