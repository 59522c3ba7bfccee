#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hilie {

/// Tabular result of one CLI run. The CSV and JSON writers emit the same
/// payload (command, parameters, seed, columns, rows); wall time is kept out
/// of both so that re-runs are byte-identical, and goes to stderr instead.
struct ExperimentReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::optional<uint64_t> seed;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    double wall_seconds = 0.0;

    void add_row(std::vector<std::string> row);
    void write_csv(std::ostream& os) const;
    void write_json(std::ostream& os) const;
    void write(std::ostream& os, const std::string& format) const; // "csv" | "json"
};

std::string csv_escape(const std::string& field);

// Fixed-format float used in report columns (shortest round-trip is not
// needed; determinism is).
std::string format_double(double v);

} // namespace hilie
