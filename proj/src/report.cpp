#include "hilie/report.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace hilie {

void ExperimentReport::add_row(std::vector<std::string> row) {
    if (row.size() != columns.size())
        throw std::logic_error("ExperimentReport: row width does not match columns");
    rows.push_back(std::move(row));
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_double(double v) {
    char buf[64];
    snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void ExperimentReport::write_csv(std::ostream& os) const {
    os << "# command=" << command << '\n';
    for (const auto& [k, v] : params) os << "# " << k << '=' << v << '\n';
    if (seed) os << "# seed=" << *seed << '\n';
    for (size_t i = 0; i < columns.size(); ++i) {
        if (i) os << ',';
        os << csv_escape(columns[i]);
    }
    os << '\n';
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << csv_escape(row[i]);
        }
        os << '\n';
    }
}

void ExperimentReport::write_json(std::ostream& os) const {
    nlohmann::json j;
    j["command"] = command;
    nlohmann::json p = nlohmann::json::object();
    for (const auto& [k, v] : params) p[k] = v;
    j["params"] = std::move(p);
    if (seed) j["seed"] = *seed;
    j["columns"] = columns;
    j["rows"] = rows;
    os << j.dump(2) << '\n';
}

void ExperimentReport::write(std::ostream& os, const std::string& format) const {
    if (format == "csv")
        write_csv(os);
    else if (format == "json")
        write_json(os);
    else
        throw std::invalid_argument("unknown format '" + format + "'");
}

} // namespace hilie
