#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "bergman/series.hpp"

namespace bergman {

/// Sampling and grid parameters. The seed is recorded in every report so
/// results are reproducible from the report alone.
struct QuadratureSpec {
    int radial_nodes = 64;
    int angular_nodes = 128;
    int mc_samples = 100000;
    std::uint64_t seed = 0xB16B00B5ull;
    double r_max = 0.995;

    void validate() const;
};

/// Deterministic random source. Draws are derived from raw mt19937_64 bits
/// (uniform via the top 53 bits, normal via Box-Muller) so streams do not
/// depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform01();
    double uniform(double lo, double hi);
    double normal();
    Complex complex_normal();

    /// Independent substream; deterministic in (seed, index).
    static Rng substream(std::uint64_t seed, std::uint64_t index);

private:
    std::mt19937_64 engine_;
    bool has_cached_ = false;
    double cached_ = 0.0;
};

/// Gauss-Legendre nodes and weights on [0, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussLegendre gauss_legendre(int count);

/// Uniform point of the unit sphere of C^n: a complex Gaussian vector,
/// normalized.
CVector sphere_point(int n, Rng& rng);

/// Volume-uniform point of r_max * B_n: uniform sphere direction with
/// radius r_max * U^{1/(2n)}.
CVector ball_point_uniform(int n, Rng& rng, double r_max);

/// Seeded pseudo-uniform sphere sample of the given size.
std::vector<CVector> sphere_grid(int n, int count, std::uint64_t seed);

/// Deterministic direction grid: equally spaced angles for n = 1, the
/// seeded sphere sampler for n >= 2.
std::vector<CVector> direction_grid(int n, int count, std::uint64_t seed);

/// Radii increasing geometrically toward r_max: 1 - r_i = (1 - r_max)^{i/(count-1)}.
std::vector<double> geometric_radii(int count, double r_max);

/// Tanh-sinh quadrature of f over (0, 1). The integrand receives both x and
/// 1-x so endpoint-singular weights can be evaluated without cancellation.
/// Handles integrable endpoint singularities.
double tanh_sinh_01(const std::function<double(double, double)>& f,
                    double tolerance = 1e-12);

} // namespace bergman
