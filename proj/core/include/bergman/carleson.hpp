#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bergman/ball_geometry.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/series.hpp"
#include "bergman/spaces.hpp"

namespace bergman {

/// A finitely supported positive measure on B_n. Every condition below is
/// then an exact finite sum.
struct DiscreteMeasure {
    struct Atom {
        BallPoint location;
        double mass;
    };

    int n = 1;
    std::vector<Atom> atoms;

    void validate() const;
    double total_mass() const;
};

/// Mass inside the nonisotropic ball {|1 - <z,zeta>| < r}; zeta must be a
/// unit vector (within 1e-12).
double mass_q(const DiscreteMeasure& mu, const CVector& zeta, double r);

/// Mass inside the Bergman-metric ball {beta(z, a) < big_r}.
double mass_d(const DiscreteMeasure& mu, const BallPoint& a, double big_r);

/// Probe grid for Carleson statistics: seeded sphere directions crossed
/// with geometrically spaced radii.
struct ProbeGrid {
    std::vector<CVector> zetas;
    std::vector<double> radii;
    std::uint64_t seed = 0;

    static ProbeGrid standard(int n, std::uint64_t seed);
};

struct CarlesonEstimate {
    double constant = 0.0; // max over the grid of mass_q / r^{n+1+alpha}
    int argmax_zeta = -1;
    int argmax_radius = -1;
};

/// Grid lower bound for the optimal constant in mu(Q_r) <= C r^{n+1+alpha}.
/// Requires n+1+alpha > 0.
CarlesonEstimate carleson_constant(const DiscreteMeasure& mu, double alpha,
                                   const ProbeGrid& grid);

/// B_{s,gamma}(mu)(z) = sum of (1-|z|^2)^s mass / |1-<z,w>|^{n+1+s+gamma}.
double berezin(const DiscreteMeasure& mu, double s, double gamma, const BallPoint& z);

/// mu(D(z, big_r)) / (1-|z|^2)^{n+1+gamma}.
double muhat(const DiscreteMeasure& mu, double big_r, double gamma, const BallPoint& z);

struct ForelliRudinValue {
    double value = 0.0;
    double tail_bound = 0.0;
    int terms = 0;
};

/// I(z) = int (1-|w|^2)^s dv(w) / |1-<z,w>|^{n+1+s+t} at |z| = rho, by the
/// unitary-invariant series
///   n! Gamma(s+1) sum_k [Gamma(c/2+k)/(k! Gamma(c/2))]^2 k!/Gamma(n+k+s+1) rho^{2k},
/// c = n+1+s+t, summed until the ratio-test tail bound drops below the
/// tolerance. Requires s > -1; throws when the tail cannot be bounded at
/// the requested tolerance.
ForelliRudinValue forelli_rudin(int n, double rho, double s, double t, double tolerance);

struct EmbeddingProbe {
    // Per test atom: the ratio of the atomwise derivative integral to the
    // normalizing power of (1 - |a|^2).
    std::vector<double> function_ratios;
    double geometric_statistic = 0.0;
    std::string geometric_statistic_kind; // "sup-muhat" (p <= q) or "lq-muhat" (q < p)
};

/// Embedding diagnostics for int |R^k f|^q dmu against ||f||_{p,alpha}^q
/// over the standard family of kernel-power test functions
/// f_a = (1 - <., a>)^{-(n+1+alpha+s)/p}, normalized by the closed-form
/// norm asymptote. The geometric statistic follows the branch: for p <= q
/// the sup of mu(D(a,R))/(1-|a|^2)^{(n+1+alpha+kp)q/p} over atom locations,
/// for q < p a Monte Carlo estimate of int muhat_{R,gamma}^{p/(p-q)} dv_gamma
/// with gamma = alpha + kp.
EmbeddingProbe embedding_probe(const DiscreteMeasure& mu, const SpaceParams& sp,
                               double q, int k, double s,
                               const std::vector<BallPoint>& test_centers,
                               double big_r, const QuadratureSpec& quad);

} // namespace bergman
