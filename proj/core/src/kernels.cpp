#include "bergman/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "bergman/gamma.hpp"

namespace bergman {

namespace {

constexpr double kBoundaryTolerance = 1e-12;

// (-1)^N Gamma(n+alpha+1)/Gamma(n+|m|+alpha+1) * m!, the positive
// inner-product weight of the frac_neg regime for |m| > N.
double frac_neg_weight(int n, double alpha, int neg_order, const MultiIndex& m) {
    const double ratio = gamma_ratio(n + alpha + 1.0, n + m.order() + alpha + 1.0);
    const double sign = (neg_order % 2 == 0) ? 1.0 : -1.0;
    return sign * ratio * m.factorial();
}

// Gamma(n+|m|+alpha+1) / (m! Gamma(n+alpha+1)), the kernel coefficient of
// z^m conj(w)^m for the power kernel.
double power_kernel_coeff(int n, double alpha, const MultiIndex& m) {
    return gamma_ratio(n + m.order() + alpha + 1.0, n + alpha + 1.0) / m.factorial();
}

} // namespace

RegimeInfo kernel_regime(int n, double alpha) {
    if (n < 1) throw std::invalid_argument("kernel_regime: n must be >= 1");
    const double top = n + 1.0 + alpha;
    if (top > kBoundaryTolerance) return {KernelRegime::standard, 0};
    if (std::abs(top) <= kBoundaryTolerance) return {KernelRegime::log_type, 0};
    const double nearest = std::round(top);
    if (std::abs(top - nearest) <= kBoundaryTolerance)
        return {KernelRegime::int_neg, static_cast<int>(-nearest)};
    return {KernelRegime::frac_neg, static_cast<int>(std::ceil(-top))};
}

std::vector<double> a_coeffs(int neg_order, int count) {
    if (neg_order < 0) throw std::invalid_argument("a_coeffs: negative order");
    if (count < 0) throw std::invalid_argument("a_coeffs: negative count");
    // (z-1)^N = sum_i binom(N,i) (-1)^{N-i} z^i, convolved with sum_{j>=1} z^j/j.
    std::vector<double> binomial(static_cast<std::size_t>(neg_order) + 1);
    binomial[0] = 1.0;
    for (int i = 1; i <= neg_order; ++i) {
        binomial[static_cast<std::size_t>(i)] =
            binomial[static_cast<std::size_t>(i - 1)] * (neg_order - i + 1) / i;
    }
    std::vector<double> out(static_cast<std::size_t>(count) + 1, 0.0);
    for (int k = 0; k <= count; ++k) {
        double value = 0.0;
        for (int i = 0; i <= std::min(neg_order, k - 1); ++i) {
            const double sign = ((neg_order - i) % 2 == 0) ? 1.0 : -1.0;
            value += binomial[static_cast<std::size_t>(i)] * sign / (k - i);
        }
        out[static_cast<std::size_t>(k)] = value;
    }
    return out;
}

KernelSpec KernelSpec::with_default_q(int n, double alpha) {
    KernelSpec spec;
    spec.n_ = n;
    spec.alpha_ = alpha;
    spec.info_ = kernel_regime(n, alpha);
    spec.default_q_ = true;
    const int big_n = spec.info_.neg_order;
    if (spec.info_.regime == KernelRegime::int_neg)
        spec.a_ = a_coeffs(big_n, std::max(big_n, 1));
    if (spec.info_.regime == KernelRegime::frac_neg ||
        spec.info_.regime == KernelRegime::int_neg) {
        for (int k = 0; k <= big_n; ++k) {
            for (const MultiIndex& m : homogeneous_indices(n, k)) {
                spec.low_weights_[m] = 1.0;
                double principal = 0.0;
                if (spec.info_.regime == KernelRegime::frac_neg) {
                    const double sign = (big_n % 2 == 0) ? 1.0 : -1.0;
                    principal = sign * power_kernel_coeff(n, alpha, m);
                } else {
                    principal = spec.a_[static_cast<std::size_t>(k)] *
                                multinomial_weight(m);
                }
                spec.omega_[m] = 1.0 - principal;
            }
        }
    }
    return spec;
}

KernelSpec KernelSpec::with_q(int n, double alpha,
                              const std::map<MultiIndex, double, GradedLex>& omega) {
    KernelSpec spec;
    spec.n_ = n;
    spec.alpha_ = alpha;
    spec.info_ = kernel_regime(n, alpha);
    spec.default_q_ = false;
    if (spec.info_.regime == KernelRegime::standard ||
        spec.info_.regime == KernelRegime::log_type) {
        if (!omega.empty())
            throw std::invalid_argument("KernelSpec: this regime has no polynomial part");
        return spec;
    }
    const int big_n = spec.info_.neg_order;
    if (spec.info_.regime == KernelRegime::int_neg)
        spec.a_ = a_coeffs(big_n, std::max(big_n, 1));
    for (int k = 0; k <= big_n; ++k) {
        for (const MultiIndex& m : homogeneous_indices(n, k)) {
            auto it = omega.find(m);
            if (it == omega.end())
                throw std::invalid_argument("KernelSpec: omega missing an index with |m| <= N");
            double principal = 0.0;
            if (spec.info_.regime == KernelRegime::frac_neg) {
                const double sign = (big_n % 2 == 0) ? 1.0 : -1.0;
                principal = sign * power_kernel_coeff(n, alpha, m);
            } else {
                principal = spec.a_[static_cast<std::size_t>(k)] * multinomial_weight(m);
            }
            // Admissibility: omega_m + principal = 1/c_m must be positive.
            const double inverse_weight = it->second + principal;
            if (!(inverse_weight > 0.0))
                throw std::invalid_argument("KernelSpec: inadmissible Q coefficient");
            spec.omega_[m] = it->second;
            spec.low_weights_[m] = 1.0 / inverse_weight;
        }
    }
    return spec;
}

double KernelSpec::omega(const MultiIndex& m) const {
    auto it = omega_.find(m);
    return it == omega_.end() ? 0.0 : it->second;
}

double KernelSpec::low_weight(const MultiIndex& m) const {
    auto it = low_weights_.find(m);
    if (it == low_weights_.end())
        throw std::invalid_argument("KernelSpec: no low-order weight for this index");
    return it->second;
}

double KernelSpec::inner_weight(const MultiIndex& m) const {
    const int k = m.order();
    switch (info_.regime) {
        case KernelRegime::standard:
            return m.factorial() * gamma_ratio(n_ + 1.0 + alpha_, n_ + k + alpha_ + 1.0);
        case KernelRegime::log_type:
            if (k == 0) return 1.0;
            return k * m.factorial() / std::exp(log_factorial(k));
        case KernelRegime::frac_neg:
            if (k <= info_.neg_order) return low_weight(m);
            return frac_neg_weight(n_, alpha_, info_.neg_order, m);
        case KernelRegime::int_neg: {
            if (k <= info_.neg_order) return low_weight(m);
            const std::vector<double> a = a_coeffs(info_.neg_order, k);
            return m.factorial() /
                   (std::exp(log_factorial(k)) * a[static_cast<std::size_t>(k)]);
        }
    }
    throw std::logic_error("inner_weight: unreachable");
}

Complex kernel_eval(const KernelSpec& spec, const BallPoint& z, const BallPoint& w) {
    if (z.dimension() != spec.n() || w.dimension() != spec.n())
        throw std::invalid_argument("kernel_eval: dimension mismatch");
    const Complex x = herm_pair(z, w);
    const Complex one_minus = 1.0 - x;
    const double top = spec.n() + 1.0 + spec.alpha();
    switch (spec.regime()) {
        case KernelRegime::standard:
            return std::pow(one_minus, Complex(-top));
        case KernelRegime::log_type:
            return 1.0 - std::log(one_minus);
        case KernelRegime::frac_neg: {
            const double sign = (spec.neg_order() % 2 == 0) ? 1.0 : -1.0;
            Complex q(0.0);
            for (int k = 0; k <= spec.neg_order(); ++k) {
                for (const MultiIndex& m : homogeneous_indices(spec.n(), k)) {
                    q += spec.omega(m) * monomial_value(z.coordinates(), m) *
                         conj_monomial_value(w.coordinates(), m);
                }
            }
            return q + sign * std::pow(one_minus, Complex(-top));
        }
        case KernelRegime::int_neg: {
            Complex q(0.0);
            for (int k = 0; k <= spec.neg_order(); ++k) {
                for (const MultiIndex& m : homogeneous_indices(spec.n(), k)) {
                    q += spec.omega(m) * monomial_value(z.coordinates(), m) *
                         conj_monomial_value(w.coordinates(), m);
                }
            }
            Complex power(1.0);
            for (int i = 0; i < spec.neg_order(); ++i) power *= (x - 1.0);
            return q - power * std::log(one_minus);
        }
    }
    throw std::logic_error("kernel_eval: unreachable");
}

Complex inner_product(const TaylorPolynomial& f, const TaylorPolynomial& g,
                      const KernelSpec& spec) {
    if (f.dimension() != spec.n() || g.dimension() != spec.n())
        throw std::invalid_argument("inner_product: dimension mismatch");
    Complex total(0.0);
    for (const auto& [m, a] : f.coefficients()) {
        const Complex b = g.coefficient(m);
        if (b == Complex(0.0)) continue;
        total += spec.inner_weight(m) * a * std::conj(b);
    }
    return total;
}

std::vector<TaylorPolynomial> orthonormal_basis(const KernelSpec& spec, int degree) {
    std::vector<TaylorPolynomial> basis;
    for (int k = 0; k <= degree; ++k) {
        for (const MultiIndex& m : homogeneous_indices(spec.n(), k)) {
            basis.push_back(
                TaylorPolynomial::monomial(m, 1.0 / std::sqrt(spec.inner_weight(m))));
        }
    }
    return basis;
}

TaylorPolynomial kernel_series(const KernelSpec& spec, const BallPoint& w, int degree) {
    if (w.dimension() != spec.n())
        throw std::invalid_argument("kernel_series: dimension mismatch");
    const double top = spec.n() + 1.0 + spec.alpha();
    switch (spec.regime()) {
        case KernelRegime::standard:
            return power_kernel_series(top, w, degree);
        case KernelRegime::log_type:
            return log_kernel_series(w, degree);
        case KernelRegime::frac_neg: {
            const double sign = (spec.neg_order() % 2 == 0) ? 1.0 : -1.0;
            TaylorPolynomial out = scale(power_kernel_series(top, w, degree), sign);
            for (int k = 0; k <= spec.neg_order(); ++k) {
                for (const MultiIndex& m : homogeneous_indices(spec.n(), k)) {
                    const Complex added =
                        spec.omega(m) * conj_monomial_value(w.coordinates(), m);
                    out.set_coefficient(m, out.coefficient(m) + added);
                }
            }
            return out;
        }
        case KernelRegime::int_neg: {
            const std::vector<double> a = a_coeffs(spec.neg_order(), degree);
            TaylorPolynomial out(spec.n(), degree);
            for (int k = 0; k <= degree; ++k) {
                for (const MultiIndex& m : homogeneous_indices(spec.n(), k)) {
                    Complex value = a[static_cast<std::size_t>(k)] *
                                    multinomial_weight(m) *
                                    conj_monomial_value(w.coordinates(), m);
                    if (k <= spec.neg_order())
                        value += spec.omega(m) * conj_monomial_value(w.coordinates(), m);
                    out.set_coefficient(m, value);
                }
            }
            return out;
        }
    }
    throw std::logic_error("kernel_series: unreachable");
}

double reproduce_check(const TaylorPolynomial& f, const KernelSpec& spec,
                       const BallPoint& w, int degree) {
    if (f.top_order() > degree)
        throw std::invalid_argument("reproduce_check: deg f exceeds kernel truncation");
    const TaylorPolynomial k_w = kernel_series(spec, w, degree);
    const Complex reproduced = inner_product(f, k_w, spec);
    return std::abs(reproduced - evaluate(f, w));
}

SeriesValue natural_kernel_eval(int n, double alpha, int k, const BallPoint& z,
                                const BallPoint& w, int degree) {
    if (k < 0) throw std::invalid_argument("natural_kernel_eval: k must be >= 0");
    if (!(2.0 * k + alpha > -1.0))
        throw std::invalid_argument("natural_kernel_eval: requires 2k + alpha > -1");
    const Complex x = herm_pair(z, w);
    const double x_abs = std::abs(x);
    const double c = n + 1.0 + alpha + 2.0 * k;

    SeriesValue out;
    out.value = Complex(1.0);
    // term_j = [(c)_j / j!] j^{-2k} x^j.
    double binom = 1.0;
    double magnitude = 0.0;
    Complex x_pow(1.0);
    for (int j = 1; j <= degree; ++j) {
        binom *= (c + (j - 1)) / j;
        x_pow *= x;
        const double diag = std::pow(static_cast<double>(j), -2.0 * k);
        out.value += binom * diag * x_pow;
        magnitude = std::abs(binom) * diag * std::pow(x_abs, j);
        out.terms = j;
    }
    // Ratio bound for the dropped tail: for j > degree the term ratio is at
    // most |x| (1 + max(0, c-1)/(degree+1)).
    const double ratio = x_abs * (1.0 + std::max(0.0, c - 1.0) / (degree + 1.0));
    if (ratio >= 1.0) {
        out.tail_bound = std::numeric_limits<double>::infinity();
    } else {
        out.tail_bound = magnitude * ratio / (1.0 - ratio);
    }
    return out;
}

} // namespace bergman
