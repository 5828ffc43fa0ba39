#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "bergman/carleson.hpp"
#include "bergman/series.hpp"

namespace bergman {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Series format:
///   {"n": int, "degree": int, "terms": [{"m": [ints], "re": f, "im": f}, ...]}
/// Rejects |m| > degree and wrong index arity; diagnostics name the
/// offending term index.
TaylorPolynomial series_from_json(const nlohmann::json& j);
nlohmann::ordered_json series_to_json(const TaylorPolynomial& f);

/// Measure format:
///   {"n": int, "atoms": [{"z": [[re, im], ...], "mass": f}, ...]}
DiscreteMeasure measure_from_json(const nlohmann::json& j);
nlohmann::ordered_json measure_to_json(const DiscreteMeasure& mu);

TaylorPolynomial load_series(const std::string& path);
DiscreteMeasure load_measure(const std::string& path);

} // namespace bergman
