#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace bergman {

/// "%.17g" with a locale-independent '.' decimal point.
std::string float17(double value);

/// A report is an ordered list of rows; serialization is byte-deterministic
/// for a fixed report (all floats through float17, fixed key order).
struct ReportRow {
    std::vector<std::pair<std::string, std::string>> fields;

    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, double value);
    void add(const std::string& key, std::uint64_t value);
    void add(const std::string& key, int value);
    void add(const std::string& key, bool value);
};

struct Report {
    std::string operation;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<ReportRow> rows;

    void param(const std::string& key, const std::string& value);
    void param(const std::string& key, double value);
    void param(const std::string& key, std::uint64_t value);
    void param(const std::string& key, int value);

    std::string to_json() const;
    std::string to_csv() const;
};

} // namespace bergman
