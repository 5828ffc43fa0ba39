// Acceptance gate: runs every verification suite at its pinned tolerances
// and enforces the per-suite runtime budgets. One pass/fail line per
// criterion; the process exits with the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "bergman/verify.hpp"

namespace {

struct Criterion {
    std::string suite;
    double max_seconds; // 0 = no budget
};

} // namespace

int main() {
    using clock = std::chrono::steady_clock;
    const bergman::VerifyConfig config; // pinned default seed

    const std::vector<Criterion> criteria = {
        {"operator-inverse", 5.0},
        {"kernel-transform", 5.0},
        {"kernel-reproduce", 30.0},
        {"monomial-mass", 10.0},
        {"log-kernel-coeffs", 0.0},
        {"log-factor-coeffs", 0.0},
        {"forelli-rudin-asymptotics", 10.0},
        {"carleson-berezin", 20.0},
        {"stirling-bridge", 0.0},
        {"inclusion-coherence", 10.0},
        {"atomic-synthesis", 0.0},
        {"determinism", 0.0},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        const auto start = clock::now();
        const bergman::SuiteResult result =
            bergman::run_verify_suite(criterion.suite, config);
        const double elapsed =
            std::chrono::duration<double>(clock::now() - start).count();

        bool pass = result.passed();
        std::string detail;
        for (const bergman::CheckRow& row : result.rows) {
            if (!row.pass) {
                detail = row.name + ": observed " + bergman::float17(row.observed) +
                         ", tolerance " + bergman::float17(row.tolerance);
                break;
            }
        }
        if (criterion.max_seconds > 0.0 && elapsed >= criterion.max_seconds) {
            pass = false;
            detail = "runtime " + std::to_string(elapsed) + " s over budget " +
                     std::to_string(criterion.max_seconds) + " s";
        }

        std::printf("[%s] %s (%zu checks, %.2f s)%s%s\n", pass ? "PASS" : "FAIL",
                    criterion.suite.c_str(), result.rows.size(), elapsed,
                    detail.empty() ? "" : " -- ", detail.c_str());
        if (!pass) ++failures;
    }
    return failures;
}
