#include "bergman/carleson.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bergman/gamma.hpp"
#include "bergman/radial_ops.hpp"

namespace bergman {

void DiscreteMeasure::validate() const {
    if (n < 1) throw std::invalid_argument("DiscreteMeasure: n must be >= 1");
    for (const Atom& atom : atoms) {
        if (atom.location.dimension() != n)
            throw std::invalid_argument("DiscreteMeasure: atom dimension mismatch");
        if (!(atom.mass > 0.0))
            throw std::invalid_argument("DiscreteMeasure: masses must be positive");
    }
}

double DiscreteMeasure::total_mass() const {
    double total = 0.0;
    for (const Atom& atom : atoms) total += atom.mass;
    return total;
}

double mass_q(const DiscreteMeasure& mu, const CVector& zeta, double r) {
    mu.validate();
    if (static_cast<int>(zeta.size()) != mu.n)
        throw std::invalid_argument("mass_q: zeta dimension mismatch");
    if (std::abs(std::sqrt(norm_sq(zeta)) - 1.0) > 1e-12)
        throw std::invalid_argument("mass_q: zeta must be a unit vector");
    if (!(r > 0.0)) throw std::invalid_argument("mass_q: r must be positive");
    double total = 0.0;
    for (const auto& atom : mu.atoms) {
        const Complex pairing = herm_pair(
            std::span<const Complex>(atom.location.coordinates()),
            std::span<const Complex>(zeta));
        if (std::abs(1.0 - pairing) < r) total += atom.mass;
    }
    return total;
}

double mass_d(const DiscreteMeasure& mu, const BallPoint& a, double big_r) {
    mu.validate();
    if (a.dimension() != mu.n) throw std::invalid_argument("mass_d: dimension mismatch");
    if (!(big_r > 0.0)) throw std::invalid_argument("mass_d: radius must be positive");
    double total = 0.0;
    for (const auto& atom : mu.atoms) {
        if (bergman_dist(atom.location, a) < big_r) total += atom.mass;
    }
    return total;
}

ProbeGrid ProbeGrid::standard(int n, std::uint64_t seed) {
    ProbeGrid grid;
    grid.seed = seed;
    grid.zetas = sphere_grid(n, 256, seed);
    const int count = 24;
    const double lo = 1e-3, hi = 2.0;
    for (int i = 0; i < count; ++i) {
        grid.radii.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
    }
    return grid;
}

CarlesonEstimate carleson_constant(const DiscreteMeasure& mu, double alpha,
                                   const ProbeGrid& grid) {
    mu.validate();
    const double exponent = mu.n + 1.0 + alpha;
    if (!(exponent > 0.0))
        throw std::invalid_argument("carleson_constant: requires n+1+alpha > 0");
    if (grid.zetas.empty() || grid.radii.empty())
        throw std::invalid_argument("carleson_constant: empty probe grid");
    CarlesonEstimate out;
    for (std::size_t zi = 0; zi < grid.zetas.size(); ++zi) {
        for (std::size_t ri = 0; ri < grid.radii.size(); ++ri) {
            const double r = grid.radii[ri];
            const double value = mass_q(mu, grid.zetas[zi], r) / std::pow(r, exponent);
            if (value > out.constant) {
                out.constant = value;
                out.argmax_zeta = static_cast<int>(zi);
                out.argmax_radius = static_cast<int>(ri);
            }
        }
    }
    return out;
}

double berezin(const DiscreteMeasure& mu, double s, double gamma, const BallPoint& z) {
    mu.validate();
    if (z.dimension() != mu.n) throw std::invalid_argument("berezin: dimension mismatch");
    const double weight = std::pow(1.0 - norm_sq(z.coordinates()), s);
    const double exponent = mu.n + 1.0 + s + gamma;
    double total = 0.0;
    for (const auto& atom : mu.atoms) {
        const Complex pairing = herm_pair(z, atom.location);
        total += atom.mass * weight / std::pow(std::abs(1.0 - pairing), exponent);
    }
    return total;
}

double muhat(const DiscreteMeasure& mu, double big_r, double gamma, const BallPoint& z) {
    const double ball_mass = mass_d(mu, z, big_r);
    return ball_mass / std::pow(1.0 - norm_sq(z.coordinates()), mu.n + 1.0 + gamma);
}

ForelliRudinValue forelli_rudin(int n, double rho, double s, double t,
                                double tolerance) {
    if (n < 1) throw std::invalid_argument("forelli_rudin: n must be >= 1");
    if (!(s > -1.0)) throw std::invalid_argument("forelli_rudin: requires s > -1");
    if (!(rho >= 0.0 && rho < 1.0))
        throw std::invalid_argument("forelli_rudin: rho must lie in [0, 1)");
    if (!(tolerance > 0.0)) throw std::invalid_argument("forelli_rudin: bad tolerance");

    const double c_half = 0.5 * (n + 1.0 + s + t);
    const double b = n + 1.0 + s;
    const double rho_sq = rho * rho;

    // term_0 = n! Gamma(s+1) / Gamma(n+s+1); recurrence
    // term_{k+1} = term_k * [(c/2+k)/(k+1)]^2 * (k+1)/(n+1+s+k) * rho^2.
    double term = std::exp(log_factorial(n) + std::lgamma(s + 1.0) - std::lgamma(b));
    ForelliRudinValue out;
    out.value = term;
    if (rho == 0.0) return out;

    constexpr int kMaxTerms = 5'000'000;
    for (int k = 0; k < kMaxTerms; ++k) {
        const double step = (c_half + k) / (k + 1.0);
        term *= step * step * (k + 1.0) / (b + k) * rho_sq;
        out.value += term;
        out.terms = k + 1;

        // sup_{j >= k+1} of the term ratio:
        // rho^2 (j+c/2)^2 / ((j+1)(j+b)) <= rho^2 (1 + |t-1|/(j+b) + |c^2/4-b|/((j+1)(j+b))).
        const double j = k + 1.0;
        const double ratio_bound =
            rho_sq * (1.0 + std::abs(t - 1.0) / (j + b) +
                      std::abs(c_half * c_half - b) / ((j + 1.0) * (j + b)));
        if (ratio_bound < 1.0) {
            const double tail = std::abs(term) * ratio_bound / (1.0 - ratio_bound);
            if (tail < tolerance * std::max(1.0, std::abs(out.value))) {
                out.tail_bound = tail;
                return out;
            }
        }
    }
    throw std::runtime_error("forelli_rudin: tail bound not reached; rho too close to 1");
}

EmbeddingProbe embedding_probe(const DiscreteMeasure& mu, const SpaceParams& sp,
                               double q, int k, double s,
                               const std::vector<BallPoint>& test_centers,
                               double big_r, const QuadratureSpec& quad) {
    mu.validate();
    sp.validate();
    quad.validate();
    if (!(q > 0.0)) throw std::invalid_argument("embedding_probe: q must be positive");
    if (!(sp.alpha + k * sp.p > -1.0))
        throw std::invalid_argument("embedding_probe: requires alpha + kp > -1");
    if (!(s > 0.0)) throw std::invalid_argument("embedding_probe: s must be positive");

    const double b = (sp.n + 1.0 + sp.alpha + s) / sp.p;
    EmbeddingProbe out;
    for (const BallPoint& center : test_centers) {
        double integral = 0.0;
        for (const auto& atom : mu.atoms) {
            const Complex x = herm_pair(atom.location, center);
            integral += atom.mass * std::pow(std::abs(power_atom_radial(b, k, x)), q);
        }
        // Closed-form norm scale of the test function: (1-|a|^2)^{(n+1+alpha)/p - b},
        // so the q-th power of the norm is (1-|a|^2)^{-sq/p}.
        const double norm_q =
            std::pow(1.0 - norm_sq(center.coordinates()), -s * q / sp.p);
        out.function_ratios.push_back(integral / norm_q);
    }

    const double gamma = sp.alpha + k * sp.p;
    if (sp.p <= q) {
        out.geometric_statistic_kind = "sup-muhat";
        double sup = 0.0;
        for (const auto& atom : mu.atoms) {
            const double denom = std::pow(
                1.0 - norm_sq(atom.location.coordinates()),
                (sp.n + 1.0 + sp.alpha + k * sp.p) * q / sp.p);
            sup = std::max(sup, mass_d(mu, atom.location, big_r) / denom);
        }
        out.geometric_statistic = sup;
    } else {
        out.geometric_statistic_kind = "lq-muhat";
        const double exponent = sp.p / (sp.p - q);
        const double c = weight_constant(sp.n, gamma, WeightConvention::automatic);
        const double shell = std::pow(quad.r_max, 2.0 * sp.n);
        Rng rng(quad.seed);
        double sum = 0.0;
        for (int i = 0; i < quad.mc_samples; ++i) {
            const CVector z = ball_point_uniform(sp.n, rng, quad.r_max);
            const BallPoint point(z);
            const double weight = std::pow(1.0 - norm_sq(z), gamma);
            sum += weight * std::pow(muhat(mu, big_r, gamma, point), exponent);
        }
        out.geometric_statistic = c * shell * sum / quad.mc_samples;
    }
    return out;
}

} // namespace bergman
