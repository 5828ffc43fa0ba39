#pragma once

#include <map>
#include <vector>

#include "bergman/series.hpp"
#include "bergman/spaces.hpp"

namespace bergman {

/// The four closed-form kernel regimes of A^2_alpha, split on n+1+alpha:
/// positive (standard power kernel), zero (log kernel), strictly between
/// consecutive negative integers (signed power kernel plus polynomial), and
/// a negative integer (polynomial-times-log kernel plus polynomial).
enum class KernelRegime { standard, log_type, frac_neg, int_neg };

struct RegimeInfo {
    KernelRegime regime = KernelRegime::standard;
    int neg_order = 0; // the N of frac_neg / int_neg
};

/// Boundary detection tolerance 1e-12 on n+1+alpha.
RegimeInfo kernel_regime(int n, double alpha);

/// Taylor coefficients A_0..A_K of (z-1)^N log(1/(1-z)), by polynomial
/// convolution of (z-1)^N with sum z^k / k. A_k > 0 for k > N.
std::vector<double> a_coeffs(int neg_order, int count);

class KernelSpec {
public:
    /// Builds the spec with the canonical polynomial part: unit inner-product
    /// weights c_m = 1 for |m| <= N, which meets the admissibility bound with
    /// margin exactly 1. Regimes standard/log_type carry no polynomial part.
    static KernelSpec with_default_q(int n, double alpha);

    /// Custom polynomial part for the frac_neg / int_neg regimes; checks the
    /// admissibility of every omega_m and derives the inner-product weights.
    static KernelSpec with_q(int n, double alpha,
                             const std::map<MultiIndex, double, GradedLex>& omega);

    int n() const { return n_; }
    double alpha() const { return alpha_; }
    KernelRegime regime() const { return info_.regime; }
    int neg_order() const { return info_.neg_order; }
    bool default_q() const { return default_q_; }

    double omega(const MultiIndex& m) const;
    double low_weight(const MultiIndex& m) const; // inner-product c_m, |m| <= N

    /// Diagonal inner-product weight of z^m in the regime's coefficient
    /// inner product; strictly positive.
    double inner_weight(const MultiIndex& m) const;

private:
    KernelSpec() = default;

    int n_ = 1;
    double alpha_ = 0.0;
    RegimeInfo info_;
    bool default_q_ = true;
    std::map<MultiIndex, double, GradedLex> omega_;
    std::map<MultiIndex, double, GradedLex> low_weights_;
    std::vector<double> a_; // int_neg only
};

/// Closed-form kernel value; principal branches of log and real powers
/// (Re(1 - <z,w>) > 0 on the ball, so no cuts are crossed).
Complex kernel_eval(const KernelSpec& spec, const BallPoint& z, const BallPoint& w);

/// The regime's coefficient inner product <f, g>.
Complex inner_product(const TaylorPolynomial& f, const TaylorPolynomial& g,
                      const KernelSpec& spec);

/// Monomial multiples e_m = z^m / sqrt(inner_weight(m)) through degree D.
std::vector<TaylorPolynomial> orthonormal_basis(const KernelSpec& spec, int degree);

/// The kernel as a truncated series in z for fixed w.
TaylorPolynomial kernel_series(const KernelSpec& spec, const BallPoint& w, int degree);

/// |<f, K(., w)> - f(w)| with the kernel series truncated at the given degree.
double reproduce_check(const TaylorPolynomial& f, const KernelSpec& spec,
                       const BallPoint& w, int degree);

struct SeriesValue {
    Complex value{0.0};
    double tail_bound = 0.0;
    int terms = 0;
};

/// Kernel of the derivative inner product
///   f(0) conj(g(0)) + int R^k f conj(R^k g) dv_{2k+alpha}:
/// 1 + sum_{j>=1} [Gamma(n+1+alpha+2k+j)/(j! Gamma(n+1+alpha+2k))] j^{-2k} <z,w>^j,
/// truncated at the given degree with a ratio-test tail bound. Requires
/// 2k + alpha > -1.
SeriesValue natural_kernel_eval(int n, double alpha, int k, const BallPoint& z,
                                const BallPoint& w, int degree);

} // namespace bergman
