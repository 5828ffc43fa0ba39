#include "bergman/spaces.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bergman {

int SpaceParams::smallest_n() const {
    validate();
    int candidate = static_cast<int>(std::ceil((-1.0 - alpha) / p));
    if (candidate < 0) candidate = 0;
    while (!(p * candidate + alpha > -1.0)) ++candidate;
    return candidate;
}

int SpaceParams::lipschitz_k() const { return smallest_integer_above(alpha); }

void SpaceParams::validate() const {
    if (n < 1) throw std::invalid_argument("SpaceParams: n must be >= 1");
    if (!(p > 0.0)) throw std::invalid_argument("SpaceParams: p must be positive");
    if (!std::isfinite(alpha)) throw std::invalid_argument("SpaceParams: alpha not finite");
}

int smallest_integer_above(double alpha) {
    int k = static_cast<int>(std::floor(alpha)) + 1;
    if (k < 0) k = 0;
    while (!(k > alpha)) ++k;
    return k;
}

double weight_constant(int n, double gamma, WeightConvention convention) {
    switch (convention) {
        case WeightConvention::unnormalized:
            return 1.0;
        case WeightConvention::normalized:
            return normalization_c(n, gamma);
        case WeightConvention::automatic:
            return gamma > -1.0 ? normalization_c(n, gamma) : 1.0;
    }
    return 1.0;
}

namespace {

// Weight factor applied to the Eq.-style norm integral: c_alpha for the
// normalized convention (alpha > -1 only), 1 otherwise.
double norm_weight_factor(const SpaceParams& sp, WeightConvention convention) {
    return weight_constant(sp.n, sp.alpha, convention);
}

} // namespace

double bergman_norm_p2(const TaylorPolynomial& f, const SpaceParams& sp,
                       WeightConvention convention) {
    return bergman_norm_p2_order(f, sp, sp.smallest_n(), convention);
}

double bergman_norm_p2_order(const TaylorPolynomial& f, const SpaceParams& sp, int k,
                             WeightConvention convention) {
    sp.validate();
    if (sp.p != 2.0) throw std::invalid_argument("bergman_norm_p2: p must equal 2");
    if (k < sp.smallest_n())
        throw std::invalid_argument("bergman_norm_p2: derivative order below admissible minimum");
    const double c = norm_weight_factor(sp, convention);
    double sum = 0.0;
    for (const auto& [m, a] : f.coefficients()) {
        const int j = m.order();
        if (j == 0) continue;
        const double mass = monomial_mass(m, 2.0 * k + sp.alpha, false);
        sum += std::norm(a) * std::pow(static_cast<double>(j), 2.0 * k) * mass;
    }
    return std::abs(f.constant_term()) + std::sqrt(c * sum);
}

namespace {

NormEstimate disk_quadrature_norm(
    const std::function<Complex(std::span<const Complex>)>& radial_deriv_n,
    Complex value_at_zero, const SpaceParams& sp, const QuadratureSpec& quad,
    WeightConvention convention, int big_n) {
    const double exponent = sp.p * big_n + sp.alpha;
    const double c = norm_weight_factor(sp, convention);
    const GaussLegendre gl = gauss_legendre(quad.radial_nodes);

    // Normalized disk volume: int g dv = int_0^1 2r dr (1/2pi) int g(r e^{i t}) dt.
    double integral = 0.0;
    for (int i = 0; i < quad.radial_nodes; ++i) {
        const double r = quad.r_max * gl.nodes[static_cast<std::size_t>(i)];
        double angular = 0.0;
        for (int j = 0; j < quad.angular_nodes; ++j) {
            const double angle = 2.0 * std::numbers::pi * j / quad.angular_nodes;
            const CVector z{Complex(r * std::cos(angle), r * std::sin(angle))};
            angular += std::pow(std::abs(radial_deriv_n(z)), sp.p);
        }
        angular /= quad.angular_nodes;
        integral += quad.r_max * gl.weights[static_cast<std::size_t>(i)] * 2.0 * r *
                    std::pow(1.0 - r * r, exponent) * angular;
    }
    NormEstimate out;
    out.method = "gauss-legendre";
    out.seed = quad.seed;
    out.value = std::abs(value_at_zero) + std::pow(c * integral, 1.0 / sp.p);
    return out;
}

NormEstimate monte_carlo_norm(
    const std::function<Complex(std::span<const Complex>)>& radial_deriv_n,
    Complex value_at_zero, const SpaceParams& sp, const QuadratureSpec& quad,
    WeightConvention convention, int big_n) {
    const double exponent = sp.p * big_n + sp.alpha;
    const double c = norm_weight_factor(sp, convention);
    const double shell_volume = std::pow(quad.r_max, 2.0 * sp.n);

    // Fixed-size sample chunks with derived substreams: the estimate does
    // not depend on how the chunks are scheduled.
    constexpr int kChunk = 4096;
    double sum = 0.0;
    double sum_sq = 0.0;
    int produced = 0;
    for (std::uint64_t chunk = 0; produced < quad.mc_samples; ++chunk) {
        Rng rng = Rng::substream(quad.seed, chunk);
        const int want = std::min(kChunk, quad.mc_samples - produced);
        for (int i = 0; i < want; ++i) {
            const CVector z = ball_point_uniform(sp.n, rng, quad.r_max);
            const double weight = std::pow(1.0 - norm_sq(z), exponent);
            const double h = weight * std::pow(std::abs(radial_deriv_n(z)), sp.p);
            sum += h;
            sum_sq += h * h;
        }
        produced += want;
    }
    const double count = static_cast<double>(quad.mc_samples);
    const double mean = sum / count;
    const double variance = std::max(0.0, sum_sq / count - mean * mean);
    const double integral = c * shell_volume * mean;
    const double integral_err = c * shell_volume * std::sqrt(variance / count);

    NormEstimate out;
    out.method = "monte-carlo";
    out.seed = quad.seed;
    out.value = std::abs(value_at_zero) + std::pow(integral, 1.0 / sp.p);
    // First-order propagation through x^{1/p}.
    if (integral > 0.0)
        out.std_error = std::pow(integral, 1.0 / sp.p - 1.0) / sp.p * integral_err;
    return out;
}

} // namespace

NormEstimate bergman_norm_sampled(
    const std::function<Complex(std::span<const Complex>)>& radial_deriv_n,
    Complex value_at_zero, const SpaceParams& sp, const QuadratureSpec& quad,
    WeightConvention convention, NormMethod method, int derivative_order) {
    sp.validate();
    quad.validate();
    const int big_n = derivative_order < 0 ? sp.smallest_n() : derivative_order;
    if (big_n < sp.smallest_n())
        throw std::invalid_argument("bergman_norm: derivative order below admissible minimum");
    if (method == NormMethod::quadrature ||
        (method == NormMethod::automatic && sp.n == 1))
        return disk_quadrature_norm(radial_deriv_n, value_at_zero, sp, quad, convention,
                                    big_n);
    return monte_carlo_norm(radial_deriv_n, value_at_zero, sp, quad, convention, big_n);
}

NormEstimate bergman_norm(const TaylorPolynomial& f, const SpaceParams& sp,
                          const QuadratureSpec& quad, NormMethod method,
                          WeightConvention convention, int derivative_order) {
    sp.validate();
    quad.validate();
    if (method == NormMethod::exact ||
        (method == NormMethod::automatic && sp.p == 2.0)) {
        if (sp.p != 2.0)
            throw std::invalid_argument("bergman_norm: exact method requires p = 2");
        NormEstimate out;
        out.method = "exact-p2";
        out.seed = quad.seed;
        out.value = derivative_order < 0
                        ? bergman_norm_p2(f, sp, convention)
                        : bergman_norm_p2_order(f, sp, derivative_order, convention);
        return out;
    }

    const int big_n = derivative_order < 0 ? sp.smallest_n() : derivative_order;
    const TaylorPolynomial rnf = radial_power(f, big_n);
    auto deriv = [&rnf](std::span<const Complex> z) {
        Complex total(0.0);
        for (const auto& [m, c] : rnf.coefficients()) total += c * monomial_value(z, m);
        return total;
    };
    return bergman_norm_sampled(deriv, f.constant_term(), sp, quad, convention, method,
                                big_n);
}

double hardy_norm_homog(const MultiIndex& m, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("hardy_norm_homog: p must be positive");
    const int n = m.dimension();
    double log_pth_power = log_factorial(n - 1) - std::lgamma(m.order() * p / 2.0 + n);
    for (int i = 0; i < n; ++i)
        log_pth_power += std::lgamma(m[static_cast<std::size_t>(i)] * p / 2.0 + 1.0);
    return std::exp(log_pth_power / p);
}

GridSupEstimate lipschitz_norm(const TaylorPolynomial& f, double alpha,
                               const QuadratureSpec& grid) {
    grid.validate();
    const int k = smallest_integer_above(alpha);
    const TaylorPolynomial rkf = radial_power(f, k);
    const std::vector<double> radii = geometric_radii(grid.radial_nodes, grid.r_max);
    const std::vector<CVector> directions =
        direction_grid(f.dimension(), grid.angular_nodes, grid.seed);

    double sup = 0.0;
    CVector z(static_cast<std::size_t>(f.dimension()));
    for (double r : radii) {
        const double weight = std::pow(1.0 - r * r, k - alpha);
        for (const CVector& direction : directions) {
            for (std::size_t i = 0; i < z.size(); ++i) z[i] = r * direction[i];
            Complex value(0.0);
            for (const auto& [m, c] : rkf.coefficients())
                value += c * monomial_value(z, m);
            sup = std::max(sup, weight * std::abs(value));
        }
    }

    GridSupEstimate out;
    out.value = std::abs(f.constant_term()) + sup;
    out.radial_nodes = grid.radial_nodes;
    out.angular_nodes = grid.angular_nodes;
    out.r_max = grid.r_max;
    out.seed = grid.seed;
    return out;
}

Complex pairing_volume(const TaylorPolynomial& f, const TaylorPolynomial& g) {
    if (f.dimension() != g.dimension())
        throw std::invalid_argument("pairing_volume: dimension mismatch");
    Complex total(0.0);
    for (const auto& [m, a] : f.coefficients()) {
        const Complex b = g.coefficient(m);
        if (b == Complex(0.0)) continue;
        total += a * std::conj(b) * monomial_mass(m, 0.0, true);
    }
    return total;
}

Complex pairing_gamma(const TaylorPolynomial& f, const TaylorPolynomial& g, int k,
                      double gamma, WeightConvention convention) {
    if (f.dimension() != g.dimension())
        throw std::invalid_argument("pairing_gamma: dimension mismatch");
    if (k < 0) throw std::invalid_argument("pairing_gamma: k must be >= 0");
    if (!(2.0 * k + gamma > -1.0))
        throw std::invalid_argument("pairing_gamma: requires 2k + gamma > -1");
    const double c = weight_constant(f.dimension(), gamma, convention);
    Complex total = f.constant_term() * std::conj(g.constant_term());
    for (const auto& [m, a] : f.coefficients()) {
        const int j = m.order();
        if (j == 0) continue;
        const Complex b = g.coefficient(m);
        if (b == Complex(0.0)) continue;
        total += c * std::pow(static_cast<double>(j), 2.0 * k) * a * std::conj(b) *
                 monomial_mass(m, 2.0 * k + gamma, false);
    }
    return total;
}

PointwiseProbe pointwise_bound_probe(const TaylorPolynomial& f, const SpaceParams& sp,
                                     const QuadratureSpec& samples) {
    sp.validate();
    samples.validate();
    const double top = sp.n + 1.0 + sp.alpha;
    PointwiseProbe out;
    if (top > kPoleTolerance) {
        out.regime = PointwiseRegime::power;
    } else if (std::abs(top) <= kPoleTolerance && sp.p > 1.0) {
        out.regime = PointwiseRegime::logarithmic;
    } else {
        throw std::invalid_argument(
            "pointwise_bound_probe: needs n+1+alpha > 0, or n+1+alpha = 0 with p > 1");
    }

    const NormEstimate norm = bergman_norm(f, sp, samples);
    out.norm = norm.value;
    const double q = sp.p / (sp.p - 1.0);

    const std::vector<double> radii = geometric_radii(samples.radial_nodes, samples.r_max);
    const std::vector<CVector> directions =
        direction_grid(sp.n, samples.angular_nodes, samples.seed);
    CVector z(static_cast<std::size_t>(sp.n));
    for (double r : radii) {
        double level = 0.0;
        for (const CVector& direction : directions) {
            for (std::size_t i = 0; i < z.size(); ++i) z[i] = r * direction[i];
            Complex value(0.0);
            for (const auto& [m, c] : f.coefficients()) value += c * monomial_value(z, m);
            level = std::max(level, std::abs(value));
        }
        const double one_minus = 1.0 - r * r;
        double factor = 0.0;
        if (out.regime == PointwiseRegime::power) {
            factor = std::pow(one_minus, top / sp.p);
        } else {
            factor = 1.0 / std::pow(std::log(2.0 / one_minus), 1.0 / q);
        }
        const double profile = level * factor / (out.norm > 0.0 ? out.norm : 1.0);
        out.profile.emplace_back(r, profile);
        out.constant = std::max(out.constant, profile);
    }
    return out;
}

} // namespace bergman
