#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bergman/io.hpp"
#include "bergman/report.hpp"
#include "bergman/verify.hpp"
#include "test_support.hpp"

using namespace bergman;
using testsupport::random_polynomial;

TEST_CASE("series json round trip") {
    Rng rng(167);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + trial % 3;
        const TaylorPolynomial f = random_polynomial(n, 5, rng);
        const TaylorPolynomial back = series_from_json(series_to_json(f));
        CHECK(back.dimension() == f.dimension());
        CHECK(back.degree() == f.degree());
        for (const auto& [m, c] : f.coefficients()) CHECK(back.coefficient(m) == c);
        CHECK(back.coefficients().size() == f.coefficients().size());
    }
}

TEST_CASE("series json validation") {
    const auto parse = [](const char* text) {
        return series_from_json(nlohmann::json::parse(text));
    };
    CHECK_NOTHROW(parse(R"({"n":2,"degree":3,"terms":[{"m":[1,2],"re":1.0,"im":0.0}]})"));

    // Wrong arity names the offending term.
    try {
        parse(R"({"n":2,"degree":3,"terms":[{"m":[1],"re":1.0,"im":0.0}]})");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("term 0") != std::string::npos);
    }

    // |m| beyond the declared degree.
    try {
        parse(R"({"n":1,"degree":2,"terms":[{"m":[1],"re":1.0,"im":0.0},{"m":[3],"re":1.0,"im":0.0}]})");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("term 1") != std::string::npos);
    }

    CHECK_THROWS_AS(parse(R"({"degree":2,"terms":[]})"), ParseError);
}

TEST_CASE("measure json round trip and validation") {
    DiscreteMeasure mu;
    mu.n = 2;
    mu.atoms.push_back({BallPoint{Complex(0.1, 0.2), Complex(-0.3, 0.0)}, 0.5});
    mu.atoms.push_back({BallPoint{Complex(0.0, 0.0), Complex(0.9, 0.0)}, 2.0});
    const DiscreteMeasure back = measure_from_json(measure_to_json(mu));
    CHECK(back.n == 2);
    REQUIRE(back.atoms.size() == 2);
    CHECK(back.atoms[1].mass == 2.0);
    CHECK(back.atoms[0].location[1] == Complex(-0.3, 0.0));

    const auto parse = [](const char* text) {
        return measure_from_json(nlohmann::json::parse(text));
    };
    CHECK_THROWS_AS(parse(R"({"n":1,"atoms":[{"z":[[0.1,0.0]],"mass":0.0}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse(R"({"n":1,"atoms":[{"z":[[1.5,0.0]],"mass":1.0}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse(R"({"n":2,"atoms":[{"z":[[0.1,0.0]],"mass":1.0}]})"),
                    ParseError);
}

TEST_CASE("float formatting") {
    CHECK(float17(0.5) == "0.5");
    CHECK(float17(1.0 / 3.0) == "0.33333333333333331");
    CHECK(float17(-0.0) == "-0");
}

TEST_CASE("report serialization is deterministic") {
    Report report;
    report.operation = "demo";
    report.param("seed", std::uint64_t{7});
    ReportRow row;
    row.add("value", 1.0 / 7.0);
    row.add("flag", true);
    report.rows.push_back(row);

    CHECK(report.to_json() == report.to_json());
    const std::string csv = report.to_csv();
    CHECK(csv.find("value,flag") != std::string::npos);
    CHECK(csv.find("0.14285714285714285") != std::string::npos);
}

TEST_CASE("verification suites") {
    CHECK(verify_suite_names().size() == 12);
    CHECK_THROWS_AS(run_verify_suite("nope", VerifyConfig{}), UnknownSuite);

    VerifyConfig config;
    config.seed = 12345;
    const SuiteResult a = run_verify_suite("log-factor-coeffs", config);
    const SuiteResult b = run_verify_suite("log-factor-coeffs", config);
    CHECK(suite_report(a, config).to_json() == suite_report(b, config).to_json());
    CHECK(a.passed());
}
