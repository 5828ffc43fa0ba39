#include "bergman/radial_ops.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace bergman {

namespace {

TaylorPolynomial apply_diagonal(const TaylorPolynomial& f,
                                const std::function<double(int)>& symbol,
                                bool keep_constant) {
    TaylorPolynomial out(f.dimension(), f.degree());
    for (const auto& [m, c] : f.coefficients()) {
        const int j = m.order();
        if (j == 0) {
            if (keep_constant) out.set_coefficient(m, c);
            continue;
        }
        out.set_coefficient(m, symbol(j) * c);
    }
    return out;
}

} // namespace

TaylorPolynomial radial_derivative(const TaylorPolynomial& f) {
    return radial_power(f, 1);
}

TaylorPolynomial radial_power(const TaylorPolynomial& f, int k) {
    if (k < 0) throw std::invalid_argument("radial_power: negative power");
    if (k == 0) return f;
    return apply_diagonal(f, [k](int j) { return std::pow(static_cast<double>(j), k); },
                          false);
}

TaylorPolynomial radial_antipower(const TaylorPolynomial& f, int k) {
    if (k < 1) throw std::invalid_argument("radial_antipower: power must be >= 1");
    return apply_diagonal(f, [k](int j) { return std::pow(static_cast<double>(j), -k); },
                          false);
}

TaylorPolynomial frac_radial(const TaylorPolynomial& f, double t) {
    if (t == 0.0) return f;
    return apply_diagonal(f, [t](int j) { return std::pow(static_cast<double>(j), t); },
                          false);
}

TaylorPolynomial rst(const TaylorPolynomial& f, const FracOpParams& params) {
    params.require_valid();
    return apply_diagonal(f, [&params](int j) { return frac_coeff(params, j); }, true);
}

TaylorPolynomial rst_inv(const TaylorPolynomial& f, const FracOpParams& params) {
    params.require_valid();
    return apply_diagonal(f, [&params](int j) { return 1.0 / frac_coeff(params, j); },
                          true);
}

TaylorPolynomial partial_derivative(const TaylorPolynomial& f, const MultiIndex& m) {
    if (m.dimension() != f.dimension())
        throw std::invalid_argument("partial_derivative: dimension mismatch");
    const int n = f.dimension();
    const int drop = m.order();
    TaylorPolynomial out(n, std::max(0, f.degree() - drop));
    std::vector<int> shifted(static_cast<std::size_t>(n));
    for (const auto& [mu, c] : f.coefficients()) {
        double factor = 1.0;
        bool vanishes = false;
        for (int i = 0; i < n; ++i) {
            const int e = mu[static_cast<std::size_t>(i)];
            const int d = m[static_cast<std::size_t>(i)];
            if (e < d) {
                vanishes = true;
                break;
            }
            for (int j = 0; j < d; ++j) factor *= (e - j);
            shifted[static_cast<std::size_t>(i)] = e - d;
        }
        if (vanishes) continue;
        MultiIndex nu(shifted);
        out.set_coefficient(nu, out.coefficient(nu) + factor * c);
    }
    return out;
}

TaylorPolynomial power_multiplier(const TaylorPolynomial& f, double e) {
    if (e == 0.0) return f;
    return apply_diagonal(f, [e](int j) { return std::pow(static_cast<double>(j), e); },
                          true);
}

Complex power_atom_radial(double b, int k, Complex x) {
    if (k < 0 || k > 12) throw std::invalid_argument("power_atom_radial: k out of range");
    if (k == 0) return std::pow(1.0 - x, -b);
    // Stirling numbers of the second kind, S(k, i).
    std::array<std::array<double, 13>, 13> stirling{};
    stirling[0][0] = 1.0;
    for (int r = 1; r <= k; ++r) {
        for (int i = 1; i <= r; ++i) {
            stirling[r][i] = stirling[r - 1][i - 1] + i * stirling[r - 1][i];
        }
    }
    Complex total(0.0);
    double pochhammer = 1.0; // (b)_i
    Complex x_pow(1.0);
    for (int i = 1; i <= k; ++i) {
        pochhammer *= b + (i - 1);
        x_pow *= x;
        total += stirling[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] *
                 pochhammer * x_pow * std::pow(1.0 - x, -b - i);
    }
    return total;
}

} // namespace bergman
