#include "bergman/series.hpp"

#include <cmath>
#include <stdexcept>

namespace bergman {

namespace {
constexpr double kDropThreshold = 1e-300;
constexpr double kBallBoundary = 1.0 - 1e-14;

void require_same_dimension(int a, int b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}
} // namespace

Complex herm_pair(std::span<const Complex> z, std::span<const Complex> w) {
    if (z.size() != w.size()) throw std::invalid_argument("herm_pair: dimension mismatch");
    Complex total(0.0);
    for (std::size_t i = 0; i < z.size(); ++i) total += z[i] * std::conj(w[i]);
    return total;
}

double norm_sq(std::span<const Complex> z) {
    double total = 0.0;
    for (const Complex& c : z) total += std::norm(c);
    return total;
}

Complex monomial_value(std::span<const Complex> z, const MultiIndex& m) {
    if (static_cast<int>(z.size()) != m.dimension())
        throw std::invalid_argument("monomial_value: dimension mismatch");
    Complex value(1.0);
    for (std::size_t i = 0; i < z.size(); ++i) {
        for (int j = 0; j < m[i]; ++j) value *= z[i];
    }
    return value;
}

Complex conj_monomial_value(std::span<const Complex> w, const MultiIndex& m) {
    if (static_cast<int>(w.size()) != m.dimension())
        throw std::invalid_argument("conj_monomial_value: dimension mismatch");
    Complex value(1.0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Complex cw = std::conj(w[i]);
        for (int j = 0; j < m[i]; ++j) value *= cw;
    }
    return value;
}

BallPoint::BallPoint(CVector coordinates) : coordinates_(std::move(coordinates)) {
    if (coordinates_.empty()) throw std::invalid_argument("BallPoint: empty coordinates");
    if (norm_sq(coordinates_) >= kBallBoundary * kBallBoundary)
        throw std::invalid_argument("BallPoint: |z| >= 1 - 1e-14");
}

BallPoint::BallPoint(std::initializer_list<Complex> coordinates)
    : BallPoint(CVector(coordinates)) {}

double BallPoint::abs() const { return std::sqrt(norm_sq(coordinates_)); }

BallPoint BallPoint::origin(int n) {
    return BallPoint(CVector(static_cast<std::size_t>(n), Complex(0.0)));
}

Complex herm_pair(const BallPoint& z, const BallPoint& w) {
    return herm_pair(std::span<const Complex>(z.coordinates()),
                     std::span<const Complex>(w.coordinates()));
}

TaylorPolynomial::TaylorPolynomial(int dimension, int degree)
    : dimension_(dimension), degree_(degree) {
    if (dimension < 1) throw std::invalid_argument("TaylorPolynomial: dimension must be >= 1");
    if (degree < 0) throw std::invalid_argument("TaylorPolynomial: degree must be >= 0");
}

Complex TaylorPolynomial::coefficient(const MultiIndex& m) const {
    auto it = coefficients_.find(m);
    return it == coefficients_.end() ? Complex(0.0) : it->second;
}

void TaylorPolynomial::set_coefficient(const MultiIndex& m, Complex value) {
    if (m.dimension() != dimension_)
        throw std::invalid_argument("set_coefficient: dimension mismatch");
    if (m.order() > degree_)
        throw std::invalid_argument("set_coefficient: |m| exceeds truncation degree");
    if (std::abs(value) < kDropThreshold) {
        coefficients_.erase(m);
        return;
    }
    coefficients_[m] = value;
}

Complex TaylorPolynomial::constant_term() const {
    return coefficient(MultiIndex::zero(dimension_));
}

TaylorPolynomial TaylorPolynomial::homogeneous_part(int k) const {
    TaylorPolynomial out(dimension_, degree_);
    for (const auto& [m, c] : coefficients_) {
        if (m.order() == k) out.set_coefficient(m, c);
    }
    return out;
}

int TaylorPolynomial::top_order() const {
    if (coefficients_.empty()) return -1;
    return coefficients_.rbegin()->first.order();
}

TaylorPolynomial TaylorPolynomial::zero(int n, int degree) {
    return TaylorPolynomial(n, degree);
}

TaylorPolynomial TaylorPolynomial::constant(int n, Complex c, int degree) {
    TaylorPolynomial out(n, degree);
    out.set_coefficient(MultiIndex::zero(n), c);
    return out;
}

TaylorPolynomial TaylorPolynomial::monomial(const MultiIndex& m, Complex c) {
    TaylorPolynomial out(m.dimension(), m.order());
    out.set_coefficient(m, c);
    return out;
}

TaylorPolynomial add(const TaylorPolynomial& f, const TaylorPolynomial& g) {
    require_same_dimension(f.dimension(), g.dimension(), "add");
    TaylorPolynomial out(f.dimension(), std::max(f.degree(), g.degree()));
    for (const auto& [m, c] : f.coefficients()) out.set_coefficient(m, c);
    for (const auto& [m, c] : g.coefficients()) out.set_coefficient(m, out.coefficient(m) + c);
    return out;
}

TaylorPolynomial scale(const TaylorPolynomial& f, Complex c) {
    TaylorPolynomial out(f.dimension(), f.degree());
    for (const auto& [m, a] : f.coefficients()) out.set_coefficient(m, c * a);
    return out;
}

TaylorPolynomial multiply_truncated(const TaylorPolynomial& f,
                                    const TaylorPolynomial& g, int degree) {
    require_same_dimension(f.dimension(), g.dimension(), "multiply_truncated");
    const int n = f.dimension();
    TaylorPolynomial out(n, degree);
    std::vector<int> sum(static_cast<std::size_t>(n));
    for (const auto& [mf, cf] : f.coefficients()) {
        if (mf.order() > degree) break;
        for (const auto& [mg, cg] : g.coefficients()) {
            if (mf.order() + mg.order() > degree) break;
            for (int i = 0; i < n; ++i) sum[static_cast<std::size_t>(i)] = mf[static_cast<std::size_t>(i)] + mg[static_cast<std::size_t>(i)];
            MultiIndex m(sum);
            out.set_coefficient(m, out.coefficient(m) + cf * cg);
        }
    }
    return out;
}

Complex evaluate(const TaylorPolynomial& f, const BallPoint& z) {
    require_same_dimension(f.dimension(), z.dimension(), "evaluate");
    // GradedLex iteration gives ascending |m|, lexicographic within order.
    Complex total(0.0);
    for (const auto& [m, c] : f.coefficients()) {
        total += c * monomial_value(z.coordinates(), m);
    }
    return total;
}

TaylorPolynomial power_kernel_series(double c, const BallPoint& w, int degree) {
    const int n = w.dimension();
    TaylorPolynomial out(n, degree);
    // binom_k = (c)_k / k!, via binom_{k+1} = binom_k * (c + k) / (k + 1).
    double binom = 1.0;
    for (int k = 0; k <= degree; ++k) {
        if (binom != 0.0) {
            for (const MultiIndex& m : homogeneous_indices(n, k)) {
                const Complex cw = conj_monomial_value(w.coordinates(), m);
                if (cw == Complex(0.0)) continue;
                out.set_coefficient(m, binom * multinomial_weight(m) * cw);
            }
        }
        binom *= (c + k) / (k + 1.0);
    }
    return out;
}

TaylorPolynomial log_kernel_series(const BallPoint& w, int degree) {
    const int n = w.dimension();
    TaylorPolynomial out(n, degree);
    out.set_coefficient(MultiIndex::zero(n), Complex(1.0));
    for (int k = 1; k <= degree; ++k) {
        for (const MultiIndex& m : homogeneous_indices(n, k)) {
            const Complex cw = conj_monomial_value(w.coordinates(), m);
            if (cw == Complex(0.0)) continue;
            out.set_coefficient(m, multinomial_weight(m) / k * cw);
        }
    }
    return out;
}

} // namespace bergman
