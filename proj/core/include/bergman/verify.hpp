#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bergman/report.hpp"

namespace bergman {

struct UnknownSuite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckRow {
    std::string name;
    double expected = 0.0;
    double observed = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckRow> rows;

    bool passed() const;
};

struct VerifyConfig {
    std::uint64_t seed = 0xB16B00B5ull;
    int samples = 100000;
    int degree = 60;
};

/// The named verification suites, in report order.
std::vector<std::string> verify_suite_names();

/// Runs one suite; throws UnknownSuite for unrecognized names. Identical
/// configs produce identical results (and hence byte-identical reports).
SuiteResult run_verify_suite(const std::string& name, const VerifyConfig& config);

Report suite_report(const SuiteResult& result, const VerifyConfig& config);

} // namespace bergman
