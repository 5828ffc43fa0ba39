#include "bergman/lacunary.hpp"

#include <cmath>
#include <stdexcept>

namespace bergman {

namespace {

constexpr double kRatioTolerance = 1e-9;

// Reduced growth of a term sequence t_k: either an explicit
// super-geometric verdict, or log t_k = const + k * log_ratio +
// power * log k + o(1).
struct ReducedGrowth {
    int super = 0; // -1: terms vanish faster than geometrically, +1: blow up
    double log_ratio = 0.0;
    std::optional<double> power;
    double scale = 1.0;
};

// Stirling reduction of prod_j Gamma(u_j M + v_j)^{w_j} along M -> infinity:
//   log = c1 * M log M + c2 * M + delta * log M + O(1),
// with c1 = sum w u, c2 = sum w u (log u - 1), delta = sum w (v - 1/2).
// When c1 = c2 = 0 the product is asymptotically C * M^delta.
struct GammaReduction {
    int super = 0;
    double m_exponent = 0.0;
};

GammaReduction reduce_gamma_factors(const std::vector<GammaFactor>& factors) {
    double c1 = 0.0, c2 = 0.0, delta = 0.0;
    for (const GammaFactor& g : factors) {
        if (g.exponent == 0.0) continue;
        if (g.stretch == 0.0) continue; // constant Gamma(shift)^w, absorbed in scale
        if (g.stretch < 0.0)
            throw std::invalid_argument("GammaFactor: stretch must be nonnegative");
        c1 += g.exponent * g.stretch;
        c2 += g.exponent * g.stretch * (std::log(g.stretch) - 1.0);
        delta += g.exponent * (g.shift - 0.5);
    }
    GammaReduction out;
    if (std::abs(c1) > kRatioTolerance) {
        out.super = c1 > 0.0 ? 1 : -1;
    } else if (std::abs(c2) > kRatioTolerance) {
        out.super = c2 > 0.0 ? 1 : -1;
    } else {
        out.m_exponent = delta;
    }
    return out;
}

// t_k = growth(k) * M_k^{order_exponent}; M_k = gaps.scale * gaps.ratio^k.
ReducedGrowth reduce_terms(const LacunaryGaps& gaps, const BlockGrowth& growth,
                           double order_exponent) {
    gaps.validate();
    ReducedGrowth out;
    out.scale = growth.scale;
    if (growth.scale == 0.0) return out;

    const GammaReduction gamma = reduce_gamma_factors(growth.gamma_factors);
    if (gamma.super != 0) {
        out.super = gamma.super;
        return out;
    }
    const double total_m_exponent = order_exponent + gamma.m_exponent;
    out.log_ratio = std::log(growth.base) + total_m_exponent * std::log(gaps.ratio);
    out.power = growth.power;
    return out;
}

Membership classify_series(const ReducedGrowth& terms) {
    if (terms.scale == 0.0) return Membership::member;
    if (terms.super != 0)
        return terms.super < 0 ? Membership::member : Membership::non_member;
    if (terms.log_ratio < -kRatioTolerance) return Membership::member;
    if (terms.log_ratio > kRatioTolerance) return Membership::non_member;
    if (!terms.power.has_value()) return Membership::inconclusive;
    // Geometric ratio 1: decide on the polynomial exponent (p-series).
    return *terms.power < -1.0 - kRatioTolerance ? Membership::member
                                                 : Membership::non_member;
}

BlockGrowth pth_power(const BlockGrowth& g, double p) {
    BlockGrowth out;
    out.scale = std::pow(g.scale, p);
    out.base = std::pow(g.base, p);
    if (g.power.has_value()) out.power = *g.power * p;
    else out.power.reset();
    out.gamma_factors = g.gamma_factors;
    for (GammaFactor& f : out.gamma_factors) f.exponent *= p;
    return out;
}

} // namespace

double LacunaryGaps::order(int k) const { return scale * std::pow(ratio, k); }

void LacunaryGaps::validate() const {
    if (!(ratio > 1.0)) throw std::invalid_argument("LacunaryGaps: gap ratio must exceed 1");
    if (!(scale > 0.0)) throw std::invalid_argument("LacunaryGaps: scale must be positive");
}

Membership lacunary_bergman_test(const LacunaryGaps& gaps, const BlockGrowth& hp_norms,
                                 const SpaceParams& sp) {
    sp.validate();
    const BlockGrowth powered = pth_power(hp_norms, sp.p);
    return classify_series(reduce_terms(gaps, powered, -(1.0 + sp.alpha)));
}

Membership lacunary_monomial_test(const LacunaryGaps& gaps,
                                  const std::vector<double>& proportions,
                                  const BlockGrowth& coefficients,
                                  const SpaceParams& sp) {
    sp.validate();
    if (static_cast<int>(proportions.size()) != sp.n)
        throw std::invalid_argument("lacunary_monomial_test: proportions arity mismatch");
    double total = 0.0;
    for (double c : proportions) {
        if (c < 0.0) throw std::invalid_argument("lacunary_monomial_test: negative proportion");
        total += c;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("lacunary_monomial_test: proportions must sum to 1");

    // |a_k|^p * prod_i Gamma(c_i M p/2 + 1) / Gamma(M p/2 + n), then the
    // m_k^{-1-alpha} factor of the membership series.
    BlockGrowth terms = pth_power(coefficients, sp.p);
    terms.scale *= std::exp(log_factorial(sp.n - 1));
    for (double c : proportions)
        terms.gamma_factors.push_back({c * sp.p / 2.0, 1.0, 1.0});
    terms.gamma_factors.push_back({sp.p / 2.0, static_cast<double>(sp.n), -1.0});
    return classify_series(reduce_terms(gaps, terms, -(1.0 + sp.alpha)));
}

Membership lacunary_monomial_test(const std::vector<std::pair<MultiIndex, Complex>>& blocks,
                                  const SpaceParams& sp) {
    sp.validate();
    int previous = 0;
    for (const auto& [m, a] : blocks) {
        (void)a;
        const int order = m.order();
        if (order <= 0) throw std::invalid_argument("lacunary blocks: orders must be positive");
        if (previous > 0 && !(static_cast<double>(order) / previous > 1.0))
            throw std::invalid_argument("lacunary blocks: orders must grow strictly");
        previous = order;
    }
    // A finite block list is a polynomial.
    return Membership::member;
}

LipschitzClass lacunary_lipschitz_test(const LacunaryGaps& gaps,
                                       const BlockGrowth& sup_norms, double alpha) {
    const ReducedGrowth q = reduce_terms(gaps, sup_norms, alpha);
    if (q.scale == 0.0) return LipschitzClass::little_oh;
    if (q.super != 0)
        return q.super < 0 ? LipschitzClass::little_oh : LipschitzClass::outside;
    if (q.log_ratio < -kRatioTolerance) return LipschitzClass::little_oh;
    if (q.log_ratio > kRatioTolerance) return LipschitzClass::outside;
    if (!q.power.has_value())
        throw std::invalid_argument(
            "lacunary_lipschitz_test: polynomial correction required at ratio 1");
    if (*q.power < -kRatioTolerance) return LipschitzClass::little_oh;
    if (*q.power > kRatioTolerance) return LipschitzClass::outside;
    return LipschitzClass::big_oh_only;
}

double monomial_sup_norm(const MultiIndex& m) {
    const int k = m.order();
    if (k == 0) return 1.0;
    double log_value = -k * std::log(static_cast<double>(k));
    for (int c : m.components()) {
        if (c > 0) log_value += c * std::log(static_cast<double>(c));
    }
    return std::exp(0.5 * log_value);
}

} // namespace bergman
