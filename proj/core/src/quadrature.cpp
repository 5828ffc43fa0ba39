#include "bergman/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bergman {

void QuadratureSpec::validate() const {
    if (radial_nodes < 1 || angular_nodes < 1 || mc_samples < 1)
        throw std::invalid_argument("QuadratureSpec: all counts must be >= 1");
    if (!(r_max > 0.0 && r_max < 1.0))
        throw std::invalid_argument("QuadratureSpec: r_max must lie in (0, 1)");
}

double Rng::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
}

double Rng::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    double u1 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
}

Rng Rng::substream(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 of (seed, index); decorrelates substreams deterministically.
    std::uint64_t x = seed + 0x9E3779B97F4A7C15ull * (index + 1);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return Rng(x);
}

GaussLegendre gauss_legendre(int count) {
    if (count < 1) throw std::invalid_argument("gauss_legendre: count must be >= 1");
    GaussLegendre out;
    out.nodes.resize(static_cast<std::size_t>(count));
    out.weights.resize(static_cast<std::size_t>(count));
    const double pi = std::numbers::pi;
    for (int i = 0; i < (count + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (count + 0.5));
        double derivative = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < count; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            derivative = count * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / derivative;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double weight = 2.0 / ((1.0 - x * x) * derivative * derivative);
        const std::size_t lo = static_cast<std::size_t>(i);
        const std::size_t hi = static_cast<std::size_t>(count - 1 - i);
        out.nodes[lo] = 0.5 * (1.0 - x);
        out.nodes[hi] = 0.5 * (1.0 + x);
        out.weights[lo] = 0.5 * weight;
        out.weights[hi] = 0.5 * weight;
    }
    return out;
}

CVector sphere_point(int n, Rng& rng) {
    CVector z(static_cast<std::size_t>(n));
    double total = 0.0;
    do {
        for (auto& c : z) c = rng.complex_normal();
        total = norm_sq(z);
    } while (total == 0.0);
    const double inv = 1.0 / std::sqrt(total);
    for (auto& c : z) c *= inv;
    return z;
}

CVector ball_point_uniform(int n, Rng& rng, double r_max) {
    CVector z = sphere_point(n, rng);
    const double r = r_max * std::pow(rng.uniform01(), 1.0 / (2.0 * n));
    for (auto& c : z) c *= r;
    return z;
}

std::vector<CVector> sphere_grid(int n, int count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<CVector> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(sphere_point(n, rng));
    return out;
}

std::vector<CVector> direction_grid(int n, int count, std::uint64_t seed) {
    if (n == 1) {
        std::vector<CVector> out;
        out.reserve(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) {
            const double angle = 2.0 * std::numbers::pi * i / count;
            out.push_back({Complex(std::cos(angle), std::sin(angle))});
        }
        return out;
    }
    return sphere_grid(n, count, seed);
}

std::vector<double> geometric_radii(int count, double r_max) {
    if (count < 1) throw std::invalid_argument("geometric_radii: count must be >= 1");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    if (count == 1) {
        out.push_back(r_max);
        return out;
    }
    for (int i = 0; i < count; ++i) {
        const double exponent = static_cast<double>(i) / (count - 1);
        out.push_back(1.0 - std::pow(1.0 - r_max, exponent));
    }
    return out;
}

double tanh_sinh_01(const std::function<double(double, double)>& f,
                    double tolerance) {
    const double pi_half = 0.5 * std::numbers::pi;
    const double t_max = 6.1;

    // x(t) = 1/(1+e^{-2y}), 1-x = 1/(1+e^{2y}), y = (pi/2) sinh t,
    // dx/dt = (pi/2) cosh t / (2 cosh^2 y).
    auto sample = [&](double t) {
        const double y = pi_half * std::sinh(t);
        const double x = 1.0 / (1.0 + std::exp(-2.0 * y));
        const double one_minus_x = 1.0 / (1.0 + std::exp(2.0 * y));
        const double cosh_y = std::cosh(y);
        const double weight = pi_half * std::cosh(t) / (2.0 * cosh_y * cosh_y);
        if (weight == 0.0 || x <= 0.0 || one_minus_x <= 0.0) return 0.0;
        return weight * f(x, one_minus_x);
    };

    double h = 1.0;
    double total = h * sample(0.0);
    for (double t = h; t <= t_max; t += h) total += h * (sample(t) + sample(-t));

    for (int level = 1; level <= 12; ++level) {
        h *= 0.5;
        double refinement = 0.0;
        for (double t = h; t <= t_max; t += 2.0 * h)
            refinement += sample(t) + sample(-t);
        const double refined = 0.5 * total + h * refinement;
        const double change = std::abs(refined - total);
        total = refined;
        if (level >= 3 && change <= tolerance * std::max(1.0, std::abs(total)))
            break;
    }
    return total;
}

} // namespace bergman
