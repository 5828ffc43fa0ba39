#include "bergman/gamma.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bergman {

namespace {

double distance_to_nonpositive_integer(double x) {
    if (x > 0.5) return x;
    return std::abs(x - std::round(x));
}

double distance_to_negative_integer(double x) {
    if (x > -0.5) return x + 1.0;
    return std::abs(x - std::round(x));
}

} // namespace

LogGamma log_gamma(double x) {
    if (distance_to_nonpositive_integer(x) <= kPoleTolerance)
        throw std::domain_error("log_gamma: argument within 1e-12 of a pole");
    if (x > 0.0) return {std::lgamma(x), 1};

    // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1-x)).
    const double pi = std::numbers::pi;
    // sin(pi x) via the fractional part, which keeps the argument reduction exact.
    const double r = x - std::floor(x); // in (0,1)
    const double sin_pix_abs = std::sin(pi * r);
    const double log_abs = std::log(pi) - std::log(sin_pix_abs) - std::lgamma(1.0 - x);
    // Gamma alternates sign between consecutive negative integers:
    // positive on (-2,-1), (-4,-3), ...; negative on (-1,0), (-3,-2), ...
    const long long cell = static_cast<long long>(std::floor(-x));
    const int sign = (cell % 2 == 0) ? -1 : 1;
    return {log_abs, sign};
}

double gamma_ratio(double a, double b) {
    const LogGamma la = log_gamma(a);
    const LogGamma lb = log_gamma(b);
    return la.sign * lb.sign * std::exp(la.log_abs - lb.log_abs);
}

bool FracOpParams::valid() const {
    if (n < 1) return false;
    const double u = n + s;
    const double v = n + s + t;
    return distance_to_negative_integer(u) > kParamTolerance &&
           distance_to_negative_integer(v) > kParamTolerance;
}

void FracOpParams::require_valid() const {
    if (!valid())
        throw std::invalid_argument(
            "FracOpParams: n+s or n+s+t is (nearly) a negative integer");
}

double frac_coeff(const FracOpParams& params, int k) {
    params.require_valid();
    if (k < 0) throw std::invalid_argument("frac_coeff: negative order");
    if (k == 0) return 1.0;
    const double a = params.n + 1.0 + params.s;
    const double b = params.n + 1.0 + params.s + params.t;
    const LogGamma la = log_gamma(a);
    const LogGamma lb = log_gamma(b);
    const LogGamma lak = log_gamma(a + k);
    const LogGamma lbk = log_gamma(b + k);
    const int sign = la.sign * lb.sign * lak.sign * lbk.sign;
    return sign * std::exp(la.log_abs + lbk.log_abs - lb.log_abs - lak.log_abs);
}

double stirling_ratio(const FracOpParams& params, int k) {
    params.require_valid();
    if (k < 1) throw std::invalid_argument("stirling_ratio: order must be >= 1");
    if (params.t == 0.0) return 1.0;
    const double scale = gamma_ratio(params.n + 1.0 + params.s,
                                     params.n + 1.0 + params.s + params.t);
    return frac_coeff(params, k) / (scale * std::pow(static_cast<double>(k), params.t));
}

double normalization_c(int n, double gamma) {
    if (!(gamma > -1.0)) throw std::invalid_argument("normalization_c: gamma <= -1");
    return std::exp(std::lgamma(n + gamma + 1.0) - log_factorial(n) -
                    std::lgamma(gamma + 1.0));
}

double monomial_mass(const MultiIndex& m, double gamma, bool normalized) {
    if (!(gamma > -1.0)) throw std::invalid_argument("monomial_mass: gamma <= -1");
    const int n = m.dimension();
    const int k = m.order();
    if (normalized) {
        return std::exp(m.log_factorial() + std::lgamma(n + gamma + 1.0) -
                        std::lgamma(n + k + gamma + 1.0));
    }
    return std::exp(log_factorial(n) + std::lgamma(gamma + 1.0) + m.log_factorial() -
                    std::lgamma(n + k + gamma + 1.0));
}

} // namespace bergman
