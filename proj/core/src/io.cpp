#include "bergman/io.hpp"

#include <fstream>

namespace bergman {

namespace {

nlohmann::json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

} // namespace

TaylorPolynomial series_from_json(const nlohmann::json& j) {
    try {
        const int n = j.at("n").get<int>();
        const int degree = j.at("degree").get<int>();
        if (n < 1) throw ParseError("series: n must be >= 1");
        if (degree < 0) throw ParseError("series: degree must be >= 0");
        TaylorPolynomial f(n, degree);
        const auto& terms = j.at("terms");
        for (std::size_t index = 0; index < terms.size(); ++index) {
            const auto& term = terms[index];
            const std::string where = "series term " + std::to_string(index);
            const auto& exponents = term.at("m");
            if (static_cast<int>(exponents.size()) != n)
                throw ParseError(where + ": index arity != n");
            std::vector<int> m;
            for (const auto& e : exponents) {
                const int value = e.get<int>();
                if (value < 0) throw ParseError(where + ": negative exponent");
                m.push_back(value);
            }
            MultiIndex mi(m);
            if (mi.order() > degree) throw ParseError(where + ": |m| exceeds degree");
            const double re = term.at("re").get<double>();
            const double im = term.at("im").get<double>();
            f.set_coefficient(mi, f.coefficient(mi) + Complex(re, im));
        }
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("series: ") + e.what());
    }
}

nlohmann::ordered_json series_to_json(const TaylorPolynomial& f) {
    nlohmann::ordered_json j;
    j["n"] = f.dimension();
    j["degree"] = f.degree();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : f.coefficients()) {
        nlohmann::ordered_json term;
        term["m"] = m.components();
        term["re"] = c.real();
        term["im"] = c.imag();
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

DiscreteMeasure measure_from_json(const nlohmann::json& j) {
    try {
        DiscreteMeasure mu;
        mu.n = j.at("n").get<int>();
        if (mu.n < 1) throw ParseError("measure: n must be >= 1");
        const auto& atoms = j.at("atoms");
        for (std::size_t index = 0; index < atoms.size(); ++index) {
            const auto& atom = atoms[index];
            const std::string where = "measure atom " + std::to_string(index);
            const auto& z = atom.at("z");
            if (static_cast<int>(z.size()) != mu.n)
                throw ParseError(where + ": coordinate arity != n");
            CVector coordinates;
            for (const auto& c : z) {
                if (c.size() != 2) throw ParseError(where + ": coordinate is not [re, im]");
                coordinates.emplace_back(c[0].get<double>(), c[1].get<double>());
            }
            const double mass = atom.at("mass").get<double>();
            if (!(mass > 0.0)) throw ParseError(where + ": mass must be positive");
            try {
                mu.atoms.push_back({BallPoint(std::move(coordinates)), mass});
            } catch (const std::invalid_argument& e) {
                throw ParseError(where + ": " + e.what());
            }
        }
        return mu;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("measure: ") + e.what());
    }
}

nlohmann::ordered_json measure_to_json(const DiscreteMeasure& mu) {
    nlohmann::ordered_json j;
    j["n"] = mu.n;
    auto atoms = nlohmann::ordered_json::array();
    for (const auto& atom : mu.atoms) {
        nlohmann::ordered_json entry;
        auto z = nlohmann::ordered_json::array();
        for (const Complex& c : atom.location.coordinates())
            z.push_back({c.real(), c.imag()});
        entry["z"] = std::move(z);
        entry["mass"] = atom.mass;
        atoms.push_back(std::move(entry));
    }
    j["atoms"] = std::move(atoms);
    return j;
}

TaylorPolynomial load_series(const std::string& path) {
    return series_from_json(parse_file(path));
}

DiscreteMeasure load_measure(const std::string& path) {
    return measure_from_json(parse_file(path));
}

} // namespace bergman
