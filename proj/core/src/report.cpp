#include "bergman/report.hpp"

#include <cstdio>
#include <set>
#include <sstream>

namespace bergman {

std::string float17(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

void ReportRow::add(const std::string& key, const std::string& value) {
    fields.emplace_back(key, value);
}
void ReportRow::add(const std::string& key, double value) {
    fields.emplace_back(key, float17(value));
}
void ReportRow::add(const std::string& key, std::uint64_t value) {
    fields.emplace_back(key, std::to_string(value));
}
void ReportRow::add(const std::string& key, int value) {
    fields.emplace_back(key, std::to_string(value));
}
void ReportRow::add(const std::string& key, bool value) {
    fields.emplace_back(key, value ? std::string("true") : std::string("false"));
}

void Report::param(const std::string& key, const std::string& value) {
    params.emplace_back(key, value);
}
void Report::param(const std::string& key, double value) {
    params.emplace_back(key, float17(value));
}
void Report::param(const std::string& key, std::uint64_t value) {
    params.emplace_back(key, std::to_string(value));
}
void Report::param(const std::string& key, int value) {
    params.emplace_back(key, std::to_string(value));
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["operation"] = operation;
    nlohmann::ordered_json p;
    for (const auto& [key, value] : params) p[key] = value;
    j["params"] = std::move(p);
    auto array = nlohmann::ordered_json::array();
    for (const ReportRow& row : rows) {
        nlohmann::ordered_json entry;
        for (const auto& [key, value] : row.fields) entry[key] = value;
        array.push_back(std::move(entry));
    }
    j["rows"] = std::move(array);
    return j.dump(2) + "\n";
}

std::string Report::to_csv() const {
    std::ostringstream out;
    out << "# operation=" << operation;
    for (const auto& [key, value] : params) out << ' ' << key << '=' << value;
    out << '\n';

    // Union of row keys in first-seen order.
    std::vector<std::string> columns;
    std::set<std::string> seen;
    for (const ReportRow& row : rows) {
        for (const auto& [key, value] : row.fields) {
            if (seen.insert(key).second) columns.push_back(key);
        }
    }
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out << ',';
        out << columns[i];
    }
    out << '\n';
    for (const ReportRow& row : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) out << ',';
            for (const auto& [key, value] : row.fields) {
                if (key == columns[i]) {
                    out << value;
                    break;
                }
            }
        }
        out << '\n';
    }
    return out.str();
}

} // namespace bergman
