#pragma once

#include <cmath>
#include <complex>

#include "bergman/quadrature.hpp"
#include "bergman/series.hpp"

namespace testsupport {

inline bergman::TaylorPolynomial random_polynomial(int n, int degree, bergman::Rng& rng) {
    bergman::TaylorPolynomial f(n, degree);
    for (int k = 0; k <= degree; ++k) {
        for (const bergman::MultiIndex& m : bergman::homogeneous_indices(n, k)) {
            f.set_coefficient(m, bergman::Complex(rng.uniform(-1.0, 1.0),
                                                  rng.uniform(-1.0, 1.0)));
        }
    }
    return f;
}

inline bergman::BallPoint random_ball_point(int n, double radius_cap, bergman::Rng& rng) {
    bergman::CVector z = bergman::sphere_point(n, rng);
    const double r = radius_cap * std::pow(rng.uniform01(), 1.0 / (2.0 * n));
    for (auto& c : z) c *= r;
    return bergman::BallPoint(std::move(z));
}

inline double rel_error(double observed, double expected) {
    return std::abs(observed - expected) / std::max(1e-300, std::abs(expected));
}

inline double rel_error(bergman::Complex observed, bergman::Complex expected) {
    return std::abs(observed - expected) / std::max(1e-300, std::abs(expected));
}

} // namespace testsupport
