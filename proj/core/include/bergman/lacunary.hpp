#pragma once

#include <optional>
#include <vector>

#include "bergman/spaces.hpp"

namespace bergman {

// Membership of an infinite lacunary expansion cannot be decided from
// finitely many floating-point tail values, so these tests consume
// closed-form block-growth descriptors: a geometric gap sequence, a
// geometric-times-polynomial magnitude, and explicit gamma-function
// factors that are reduced analytically through Stirling's formula.

/// Homogeneous orders m_k = scale * ratio^k, k = 1, 2, ...; requires ratio > 1.
struct LacunaryGaps {
    double scale = 1.0;
    double ratio = 2.0;

    double order(int k) const;
    void validate() const;
};

/// Gamma(stretch * M + shift)^exponent as a function of the block order M.
struct GammaFactor {
    double stretch = 0.0;
    double shift = 1.0;
    double exponent = 1.0;
};

/// Magnitude c(k) = scale * base^k * k^power * prod_j Gamma-factors(M_k).
/// A missing power means the polynomial correction is unknown; ratio-test
/// decisions that hinge on it come back inconclusive.
struct BlockGrowth {
    double scale = 1.0;
    double base = 1.0;
    std::optional<double> power = 0.0;
    std::vector<GammaFactor> gamma_factors;
};

enum class Membership { member, non_member, inconclusive };

enum class LipschitzClass {
    little_oh,    // in the little-oh space, hence in the big-oh space too
    big_oh_only,  // bounded but not vanishing
    outside
};

/// Convergence of sum_k m_k^{-1-alpha} ||f_{m_k}||_{H^p}^p for the gap
/// sequence and the supplied closed-form block norms.
Membership lacunary_bergman_test(const LacunaryGaps& gaps, const BlockGrowth& hp_norms,
                                 const SpaceParams& sp);

/// Lacunary-series variant for single-monomial blocks z^{m_k} with
/// m_{k,i} = proportions[i] * M_k: the H^p block norms are supplied by the
/// closed monomial formula and folded into the descriptor analytically.
/// `coefficients` describes |a_k|.
Membership lacunary_monomial_test(const LacunaryGaps& gaps,
                                  const std::vector<double>& proportions,
                                  const BlockGrowth& coefficients,
                                  const SpaceParams& sp);

/// A finite list of monomial blocks is a polynomial, hence a member of
/// every space; validates lacunarity of the listed orders.
Membership lacunary_monomial_test(const std::vector<std::pair<MultiIndex, Complex>>& blocks,
                                  const SpaceParams& sp);

/// Classification by sup / limit of m_k^alpha ||f_{m_k}||_{H^infty}.
LipschitzClass lacunary_lipschitz_test(const LacunaryGaps& gaps,
                                       const BlockGrowth& sup_norms, double alpha);

/// sup over the sphere of |zeta^m|: sqrt(prod_i m_i^{m_i} / |m|^{|m|}),
/// with 0^0 = 1.
double monomial_sup_norm(const MultiIndex& m);

} // namespace bergman
