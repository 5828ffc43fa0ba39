#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bergman/gamma.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/radial_ops.hpp"
#include "bergman/series.hpp"

namespace bergman {

/// Parameters (n, p, alpha) of a weighted Bergman space. The derived
/// integers are recomputed on demand, never stored.
struct SpaceParams {
    int n = 1;
    double p = 2.0;
    double alpha = 0.0;

    /// Smallest nonnegative integer N with pN + alpha > -1, strictly;
    /// ties at pN + alpha = -1 round up.
    int smallest_n() const;

    /// Smallest nonnegative integer strictly greater than alpha (the
    /// derivative order of the Lipschitz-space norm).
    int lipschitz_k() const;

    void validate() const;
};

int smallest_integer_above(double alpha);

/// Weight convention for dv_alpha. The paper-style normalized probability
/// weight exists only for alpha > -1; "automatic" selects it there and the
/// raw weight (1-|z|^2)^alpha dv otherwise.
enum class WeightConvention { automatic, normalized, unnormalized };

double weight_constant(int n, double gamma, WeightConvention convention);

/// Exact p = 2 norm: |f(0)| + sqrt(sum_{|m|>0} |a_m|^2 |m|^{2N} u(m, 2N+alpha))
/// with u the monomial mass in the active weight convention and
/// N = smallest_n(). No quadrature.
double bergman_norm_p2(const TaylorPolynomial& f, const SpaceParams& sp,
                       WeightConvention convention = WeightConvention::automatic);

/// Same norm with an explicit derivative order k >= smallest_n().
double bergman_norm_p2_order(const TaylorPolynomial& f, const SpaceParams& sp, int k,
                             WeightConvention convention = WeightConvention::automatic);

enum class NormMethod { automatic, exact, quadrature, monte_carlo };

struct NormEstimate {
    double value = 0.0;
    double std_error = 0.0; // Monte Carlo only
    std::string method;
    std::uint64_t seed = 0;
};

/// Quasi-norm |f(0)| + [ int (1-|z|^2)^{pN} |R^N f|^p dv_alpha ]^{1/p},
/// integrated over |z| <= r_max. For n = 1 a tensor Gauss-Legendre x
/// trapezoid rule is used; for n >= 2, seeded Monte Carlo with a reported
/// standard error.
NormEstimate bergman_norm(const TaylorPolynomial& f, const SpaceParams& sp,
                          const QuadratureSpec& quad,
                          NormMethod method = NormMethod::automatic,
                          WeightConvention convention = WeightConvention::automatic,
                          int derivative_order = -1);

/// Norm estimate for a function given through a pointwise evaluator of
/// R^N f; used for atom sums that have no truncated series form.
NormEstimate bergman_norm_sampled(
    const std::function<Complex(std::span<const Complex>)>& radial_deriv_n,
    Complex value_at_zero, const SpaceParams& sp, const QuadratureSpec& quad,
    WeightConvention convention = WeightConvention::automatic,
    NormMethod method = NormMethod::automatic, int derivative_order = -1);

/// H^p norm of the monomial zeta^m on the sphere:
/// ||zeta^m||_{H^p}^p = (n-1)! prod_i Gamma(m_i p/2 + 1) / Gamma(|m| p/2 + n).
double hardy_norm_homog(const MultiIndex& m, double p);

struct GridSupEstimate {
    double value = 0.0;      // a lower bound of the supremum
    int radial_nodes = 0;
    int angular_nodes = 0;
    double r_max = 0.0;
    std::uint64_t seed = 0;
};

/// |f(0)| + max over a deterministic radial-angular grid of
/// (1-|z|^2)^{k-alpha} |R^k f(z)|, k the smallest integer > alpha.
/// A grid lower bound of the true supremum, reported as such.
GridSupEstimate lipschitz_norm(const TaylorPolynomial& f, double alpha,
                               const QuadratureSpec& grid);

/// Volume pairing sum_m a_m conj(b_m) * normalized-mass(m, 0); exact on
/// polynomials by monomial orthogonality.
Complex pairing_volume(const TaylorPolynomial& f, const TaylorPolynomial& g);

/// f(0) conj(g(0)) + sum_{|m|>0} |m|^{2k} a_m conj(b_m) mass(m, 2k+gamma)
/// in the active weight convention. Requires 2k + gamma > -1.
Complex pairing_gamma(const TaylorPolynomial& f, const TaylorPolynomial& g, int k,
                      double gamma,
                      WeightConvention convention = WeightConvention::automatic);

enum class PointwiseRegime { power, logarithmic };

struct PointwiseProbe {
    PointwiseRegime regime = PointwiseRegime::power;
    double constant = 0.0;                            // sup of the profile
    double norm = 0.0;                                // the normalizer used
    std::vector<std::pair<double, double>> profile;   // (r, max over directions)
};

/// Growth profile |f(z)| (1-|z|^2)^{(n+alpha+1)/p} / ||f|| in the power
/// regime (n+1+alpha > 0), or |f(z)| / log(2/(1-|z|^2))^{1/q} / ||f|| in the
/// log regime (n+1+alpha = 0, p > 1, 1/p + 1/q = 1).
PointwiseProbe pointwise_bound_probe(const TaylorPolynomial& f, const SpaceParams& sp,
                                     const QuadratureSpec& samples);

} // namespace bergman
