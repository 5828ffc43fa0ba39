#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bergman/carleson.hpp"
#include "bergman/lacunary.hpp"
#include "bergman/series.hpp"
#include "bergman/spaces.hpp"

namespace bergman {

enum class Relation { equal, strict_subset, strict_superset, neither };

std::string relation_name(Relation r);

/// Inclusion of the weighted Bergman space (p1, alpha1) in (p2, alpha2):
/// equal only for identical parameters; otherwise decided by the sharp
/// index arithmetic — (n+1+alpha)/p monotone comparison when p1 <= p2,
/// strict (1+alpha)/p comparison when p2 < p1. Inclusions between distinct
/// spaces are always strict.
Relation inclusion_bergman(const SpaceParams& first, const SpaceParams& second);

/// Lipschitz chain: alpha > beta means strict inclusion.
Relation inclusion_lipschitz(double alpha, double beta);

/// Position of the growth space Lambda_{-gamma} relative to A^p_alpha:
/// Lambda_{-gamma} sits inside iff gamma < (1+alpha)/p (strictly), and
/// contains the Bergman space iff gamma >= (n+1+alpha)/p.
Relation bergman_vs_lipschitz(double p, double alpha, double gamma, int n);

struct LipschitzStretch {
    double stretch = 0.0; // 1/p
    double lower = 0.0;   // (1+alpha)/p
    double upper = 0.0;   // (n+1+alpha)/p
};

LipschitzStretch lipschitz_stretch(double p, double alpha, int n);

/// The slice witness with R^k image (1-z_1)^{-t-k} - 1: the coefficient of
/// z_1^j is (t+k)_j / j! * j^{-k}, all other monomials zero.
TaylorPolynomial witness_ft(double t, int k, int n, int degree);

/// Growth criterion for the slice witness: it lies in A^p_alpha exactly
/// when t < (n+1+alpha)/p, and in the growth space Lambda_{-gamma} exactly
/// when t <= gamma.
bool ft_in_bergman(double t, const SpaceParams& sp);
bool ft_in_growth_space(double t, double gamma);

/// One-variable lacunary series sum_{k=1}^{K} 2^{k e} z^{2^k}.
TaylorPolynomial lacunary_series_n1(double coefficient_exponent, int blocks);

/// The boundary witness sum 2^{k(1+alpha)/p} z^{2^k} (n = 1 only): lies in
/// Lambda_{-(1+alpha)/p} but outside A^p_alpha.
TaylorPolynomial lacunary_witness(double p, double alpha, int blocks);

/// Symbolic block data of lacunary_series_n1 for the membership tests.
LacunaryGaps lacunary_series_gaps();
BlockGrowth lacunary_series_norms(double coefficient_exponent);

struct WitnessChoice {
    std::string kind;     // "lacunary" or "slice"
    double parameter = 0; // the coefficient exponent, resp. t
    Membership in_first = Membership::inconclusive;
    Membership in_second = Membership::inconclusive;
};

/// For first !superset-of second and first not included in second, builds a
/// separating function in the first space but not the second (n = 1), and
/// reports the two membership decisions from the lacunary/growth criteria.
std::optional<WitnessChoice> separating_witness(const SpaceParams& first,
                                                const SpaceParams& second);

struct AtomSpec {
    BallPoint location;
    double b;

    /// b must be neither 0 nor a negative integer.
    void validate() const;
};

Complex atom_eval(const AtomSpec& atom, const BallPoint& z);

/// (1-|a|^2)^{(n+1+alpha)/p - b}, the closed-form scale of the atom norm.
double atom_norm_asymptote(const AtomSpec& atom, const SpaceParams& sp);

struct Lattice {
    std::vector<BallPoint> points;
    double separation = 0.0; // target delta; pairwise distance >= delta/2 verified
    int shells = 0;
    std::uint64_t seed = 0;
};

/// Shells at r_j = 1 - 2^{-j} with seeded sphere directions thinned to
/// pairwise Bergman separation >= delta/2 (verified after generation).
Lattice lattice_generate(int n, double delta, int shells, std::uint64_t seed);

struct SynthesisReport {
    NormEstimate norm;
    double coefficient_sum = 0.0; // sum |c_k|^p
    double ratio = 0.0;           // norm^p / coefficient sum
};

/// f(z) = sum c_k (1-|a_k|^2)^{b-(n+1+alpha)/p} (1-<z,a_k>)^{-b}, with the
/// admissibility guard b > n max(1,1/p) + (alpha+1)/p enforced strictly
/// (boundary rejected). Quasi-norm by the sampled Monte Carlo / quadrature
/// path.
SynthesisReport atomic_synthesize(const std::vector<double>& coefficients,
                                  const Lattice& lattice, double b,
                                  const SpaceParams& sp, const QuadratureSpec& quad);

/// max over the family of ||power_multiplier(f, (beta-alpha)/p)||_{p,beta}
/// / ||f||_{p,alpha}; exact norms at p = 2, sampled otherwise.
double multiplier_bound_probe(double p, double alpha, double beta,
                              const std::vector<TaylorPolynomial>& family,
                              const QuadratureSpec& quad);

} // namespace bergman
