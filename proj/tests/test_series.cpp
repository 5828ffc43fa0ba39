#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "bergman/series.hpp"
#include "test_support.hpp"

using namespace bergman;
using testsupport::random_ball_point;
using testsupport::random_polynomial;

namespace {

// Brute-force convolution over all index pairs, used as the oracle for
// multiply_truncated.
TaylorPolynomial convolve_oracle(const TaylorPolynomial& f, const TaylorPolynomial& g,
                                 int degree) {
    const int n = f.dimension();
    std::map<std::vector<int>, Complex> sums;
    for (const auto& [mf, cf] : f.coefficients()) {
        for (const auto& [mg, cg] : g.coefficients()) {
            std::vector<int> key(static_cast<std::size_t>(n));
            int total = 0;
            for (int i = 0; i < n; ++i) {
                key[static_cast<std::size_t>(i)] = mf[static_cast<std::size_t>(i)] +
                                                   mg[static_cast<std::size_t>(i)];
                total += key[static_cast<std::size_t>(i)];
            }
            if (total > degree) continue;
            sums[key] += cf * cg;
        }
    }
    TaylorPolynomial out(n, degree);
    for (const auto& [key, value] : sums) out.set_coefficient(MultiIndex(key), value);
    return out;
}

TaylorPolynomial z1_powers(int n, int degree) {
    TaylorPolynomial f(n, degree);
    for (int k = 0; k <= degree; ++k) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[0] = k;
        f.set_coefficient(MultiIndex(e), 1.0);
    }
    return f;
}

} // namespace

TEST_CASE("hermitian pairing") {
    CHECK(herm_pair(BallPoint{0.5, 0.0}, BallPoint{0.0, 0.5}) == Complex(0.0));
    CHECK(herm_pair(BallPoint{0.6, 0.0}, BallPoint{0.6, 0.0}) == Complex(0.36));
    const Complex value =
        herm_pair(BallPoint{Complex(0.3, 0.4), 0.0}, BallPoint{0.1, 0.0});
    CHECK(std::abs(value - Complex(0.03, 0.04)) < 1e-16);

    Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        const BallPoint z = random_ball_point(2, 0.9, rng);
        const BallPoint w = random_ball_point(2, 0.9, rng);
        CHECK(std::abs(herm_pair(z, w) - std::conj(herm_pair(w, z))) < 1e-16);
    }

    CHECK_THROWS_AS(herm_pair(BallPoint{0.5}, BallPoint{0.0, 0.5}),
                    std::invalid_argument);
}

TEST_CASE("ball point validation") {
    CHECK_THROWS_AS(BallPoint{1.0}, std::invalid_argument);
    CHECK_THROWS_AS((BallPoint{0.8, 0.7}), std::invalid_argument);
    CHECK_NOTHROW(BallPoint{0.999});
}

TEST_CASE("add and scale") {
    TaylorPolynomial z1 = TaylorPolynomial::monomial(MultiIndex{1, 0});
    TaylorPolynomial z2 = TaylorPolynomial::monomial(MultiIndex{0, 1});
    const TaylorPolynomial sum = add(z1, z2);
    CHECK(sum.coefficient(MultiIndex{1, 0}) == Complex(1.0));
    CHECK(sum.coefficient(MultiIndex{0, 1}) == Complex(1.0));

    CHECK(scale(z1, 0.0).is_zero());
    CHECK(add(sum, scale(sum, -1.0)).is_zero());
    CHECK_THROWS_AS(add(z1, TaylorPolynomial::monomial(MultiIndex{1})),
                    std::invalid_argument);
}

TEST_CASE("multiply_truncated") {
    const int n = 1;
    TaylorPolynomial one_plus(n, 1);
    one_plus.set_coefficient(MultiIndex{0}, 1.0);
    one_plus.set_coefficient(MultiIndex{1}, 1.0);
    TaylorPolynomial one_minus(n, 1);
    one_minus.set_coefficient(MultiIndex{0}, 1.0);
    one_minus.set_coefficient(MultiIndex{1}, -1.0);

    const TaylorPolynomial square = multiply_truncated(one_plus, one_minus, 2);
    CHECK(square.coefficient(MultiIndex{0}) == Complex(1.0));
    CHECK(square.coefficient(MultiIndex{1}) == Complex(0.0));
    CHECK(square.coefficient(MultiIndex{2}) == Complex(-1.0));

    // f * 1 = f.
    Rng rng(11);
    const TaylorPolynomial f = random_polynomial(2, 5, rng);
    const TaylorPolynomial identity = TaylorPolynomial::constant(2, 1.0);
    const TaylorPolynomial same = multiply_truncated(f, identity, 5);
    for (const auto& [m, c] : f.coefficients()) CHECK(same.coefficient(m) == c);

    // (sum_{k<=4} z^k)(1 - z) truncated at 4 leaves only the constant;
    // expected values frozen from the convolution oracle.
    const TaylorPolynomial geometric = z1_powers(1, 4);
    const TaylorPolynomial telescoped = multiply_truncated(geometric, one_minus, 4);
    const TaylorPolynomial oracle = convolve_oracle(geometric, one_minus, 4);
    CHECK(telescoped.coefficient(MultiIndex{0}) == Complex(1.0));
    for (int k = 1; k <= 4; ++k)
        CHECK(telescoped.coefficient(MultiIndex{k}) == Complex(0.0));
    for (const auto& [m, c] : oracle.coefficients())
        CHECK(telescoped.coefficient(m) == c);
}

TEST_CASE("evaluate") {
    const TaylorPolynomial f = TaylorPolynomial::monomial(MultiIndex{1, 1});
    const Complex value = evaluate(f, BallPoint{0.5, Complex(0.0, 0.5)});
    CHECK(std::abs(value - Complex(0.0, 0.25)) < 1e-16);

    const TaylorPolynomial c3 = TaylorPolynomial::constant(2, 3.0);
    CHECK(evaluate(c3, BallPoint{0.1, 0.2}) == Complex(3.0));

    // Geometric-series closed form: truncation of 1/(1-z) at 0.5.
    const TaylorPolynomial geometric = z1_powers(1, 50);
    CHECK(std::abs(evaluate(geometric, BallPoint{0.5}) - 2.0) < 1e-14);

    CHECK_THROWS_AS(evaluate(geometric, BallPoint{0.5, 0.0}), std::invalid_argument);
}

TEST_CASE("evaluate is linear") {
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + trial % 2;
        const TaylorPolynomial f = random_polynomial(n, 6, rng);
        const TaylorPolynomial g = random_polynomial(n, 6, rng);
        const BallPoint z = random_ball_point(n, 0.8, rng);
        const Complex lhs = evaluate(add(f, g), z);
        const Complex rhs = evaluate(f, z) + evaluate(g, z);
        CHECK(std::abs(lhs - rhs) < 1e-13);
    }
}

TEST_CASE("multiply agrees with pointwise product") {
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + trial % 2;
        const TaylorPolynomial f = random_polynomial(n, 4, rng);
        const TaylorPolynomial g = random_polynomial(n, 4, rng);
        const TaylorPolynomial fg = multiply_truncated(f, g, 8);
        const BallPoint z = random_ball_point(n, 0.7, rng);
        CHECK(std::abs(evaluate(fg, z) - evaluate(f, z) * evaluate(g, z)) < 1e-10);
    }
}

TEST_CASE("multinomial identity") {
    Rng rng(19);
    for (int n = 1; n <= 3; ++n) {
        const BallPoint w = random_ball_point(n, 0.9, rng);
        for (int k = 0; k <= 6; ++k) {
            for (int point = 0; point < 10; ++point) {
                const BallPoint z = random_ball_point(n, 0.9, rng);
                Complex sum(0.0);
                for (const MultiIndex& m : homogeneous_indices(n, k)) {
                    sum += multinomial_weight(m) * monomial_value(z.coordinates(), m) *
                           conj_monomial_value(w.coordinates(), m);
                }
                const Complex direct = std::pow(herm_pair(z, w), k);
                CHECK(std::abs(sum - direct) <=
                      1e-12 * std::max(1e-300, std::abs(direct)));
            }
        }
    }
}

TEST_CASE("power kernel series coefficients") {
    // c = n+1+alpha with n = 1, alpha = 0: coefficient of z^k is (k+1) conj(w)^k,
    // frozen from the binomial-series oracle Gamma(2+k)/(k! Gamma(2)) = k+1.
    const BallPoint w{Complex(0.3, -0.2)};
    const TaylorPolynomial series = power_kernel_series(2.0, w, 12);
    Complex cw(1.0);
    for (int k = 0; k <= 12; ++k) {
        CHECK(std::abs(series.coefficient(MultiIndex{k}) - (k + 1.0) * cw) <=
              1e-14 * (k + 1.0) * std::abs(cw));
        cw *= std::conj(w[0]);
    }

    // k = 0 coefficient is 1 for any exponent.
    const TaylorPolynomial other = power_kernel_series(3.7, w, 4);
    CHECK(other.coefficient(MultiIndex{0}) == Complex(1.0));

    // First-order term in two variables: coefficient of z_1 is c conj(w_1).
    const BallPoint w2{Complex(0.1, 0.4), Complex(-0.3, 0.0)};
    const double c = 1.9;
    const TaylorPolynomial first = power_kernel_series(c, w2, 3);
    CHECK(std::abs(first.coefficient(MultiIndex{1, 0}) - c * std::conj(w2[0])) < 1e-15);

    // Terminating exponent: c = -2 ends at degree 2 even though D = 8.
    const TaylorPolynomial terminating = power_kernel_series(-2.0, w, 8);
    CHECK(terminating.top_order() <= 2);
}

TEST_CASE("power kernel series matches closed form") {
    Rng rng(23);
    for (int n = 1; n <= 2; ++n) {
        const double s = 0.7;
        const double c = n + 1.0 + s;
        const BallPoint w = random_ball_point(n, 0.7, rng);
        const TaylorPolynomial series = power_kernel_series(c, w, 60);
        for (int trial = 0; trial < 10; ++trial) {
            BallPoint z = random_ball_point(n, 0.7, rng);
            if (z.abs() * w.abs() > 0.5) continue;
            const Complex closed = std::pow(1.0 - herm_pair(z, w), Complex(-c));
            CHECK(testsupport::rel_error(evaluate(series, z), closed) < 1e-8);
        }
    }
}

TEST_CASE("log kernel series coefficients") {
    const BallPoint w{Complex(0.4, 0.1)};
    const TaylorPolynomial series = log_kernel_series(w, 10);
    CHECK(series.coefficient(MultiIndex{0}) == Complex(1.0));
    Complex cw = std::conj(w[0]);
    for (int k = 1; k <= 10; ++k) {
        CHECK(std::abs(series.coefficient(MultiIndex{k}) - cw / static_cast<double>(k)) <
              1e-16 * k);
        cw *= std::conj(w[0]);
    }

    // n = 2, m = (1,1): coefficient 2!/(1!1!*2) conj(w_1 w_2) = conj(w_1 w_2).
    const BallPoint w2{Complex(0.2, 0.3), Complex(-0.1, 0.2)};
    const TaylorPolynomial series2 = log_kernel_series(w2, 4);
    const Complex expected = std::conj(w2[0] * w2[1]);
    CHECK(std::abs(series2.coefficient(MultiIndex{1, 1}) - expected) < 1e-16);
}

TEST_CASE("coefficient storage invariants") {
    TaylorPolynomial f(2, 3);
    CHECK_THROWS_AS(f.set_coefficient(MultiIndex{2, 2}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(f.set_coefficient(MultiIndex{1}, 1.0), std::invalid_argument);
    f.set_coefficient(MultiIndex{1, 0}, 1e-301);
    CHECK(f.is_zero()); // sub-threshold coefficients are dropped
    f.set_coefficient(MultiIndex{1, 2}, 2.0);
    CHECK(f.homogeneous_part(3).coefficient(MultiIndex{1, 2}) == Complex(2.0));
    CHECK(f.homogeneous_part(1).is_zero());
}
