#pragma once

#include "bergman/multi_index.hpp"

namespace bergman {

/// Distance below which a gamma argument counts as sitting on a pole.
inline constexpr double kPoleTolerance = 1e-12;

/// Distance below which operator parameters count as invalid. Deliberately
/// looser than kPoleTolerance: user-facing validation versus internal
/// numeric safety.
inline constexpr double kParamTolerance = 1e-9;

struct LogGamma {
    double log_abs = 0.0;
    int sign = 1;
};

/// log|Gamma(x)| together with the sign of Gamma(x). For x < 0 the value is
/// obtained from the reflection formula Gamma(x)Gamma(1-x) = pi/sin(pi x).
/// Throws std::domain_error within kPoleTolerance of a nonpositive integer.
LogGamma log_gamma(double x);

/// Gamma(a)/Gamma(b), formed in log space before exponentiating.
double gamma_ratio(double a, double b);

/// Parameters (n, s, t) of the fractional radial operators. Valid iff
/// neither n+s nor n+s+t is within kParamTolerance of a negative integer.
struct FracOpParams {
    int n = 1;
    double s = 0.0;
    double t = 0.0;

    bool valid() const;
    void require_valid() const;

    /// Parameters of the inverse operator: (s+t, -t).
    FracOpParams inverse() const { return {n, s + t, -t}; }
};

/// The diagonal symbol Gamma(n+1+s)Gamma(n+1+k+s+t) /
/// [Gamma(n+1+s+t)Gamma(n+1+k+s)]. Returns exactly 1 at k = 0.
double frac_coeff(const FracOpParams& params, int k);

/// frac_coeff(params, k) normalized by its k -> infinity scale
/// Gamma(n+1+s)/Gamma(n+1+s+t) * k^t; tends to 1 and is monitored as an
/// asymptotic diagnostic.
double stirling_ratio(const FracOpParams& params, int k);

/// c_gamma = Gamma(n+gamma+1)/(n! Gamma(gamma+1)), the constant making
/// c_gamma (1-|z|^2)^gamma dv a probability measure under volume-normalized
/// dv. Requires gamma > -1.
double normalization_c(int n, double gamma);

/// The integral of |z^m|^2 (1-|z|^2)^gamma over B_n.
/// Unnormalized: n! Gamma(gamma+1) m! / Gamma(n+|m|+gamma+1).
/// Normalized (multiplied by c_gamma): m! Gamma(n+gamma+1) / Gamma(n+|m|+gamma+1).
double monomial_mass(const MultiIndex& m, double gamma, bool normalized);

} // namespace bergman
