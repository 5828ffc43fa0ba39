#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "bergman/multi_index.hpp"

namespace bergman {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// <z,w> = z_1 conj(w_1) + ... + z_n conj(w_n).
Complex herm_pair(std::span<const Complex> z, std::span<const Complex> w);

double norm_sq(std::span<const Complex> z);

/// z^m, multiplied factor by factor in coordinate order.
Complex monomial_value(std::span<const Complex> z, const MultiIndex& m);

/// conj(w)^m.
Complex conj_monomial_value(std::span<const Complex> w, const MultiIndex& m);

/// A point of the open unit ball B_n. The constructor rejects |z| >= 1 - 1e-14.
class BallPoint {
public:
    explicit BallPoint(CVector coordinates);
    BallPoint(std::initializer_list<Complex> coordinates);

    int dimension() const { return static_cast<int>(coordinates_.size()); }
    const CVector& coordinates() const { return coordinates_; }
    Complex operator[](std::size_t i) const { return coordinates_[i]; }
    double abs() const;

    static BallPoint origin(int n);

private:
    CVector coordinates_;
};

Complex herm_pair(const BallPoint& z, const BallPoint& w);

/// Truncated Taylor expansion of a holomorphic function on B_n, stored
/// sparsely. Absent keys mean coefficient zero; every stored key has the
/// polynomial's dimension and |m| <= degree. Coefficients below 1e-300 in
/// magnitude are dropped on insertion.
class TaylorPolynomial {
public:
    using CoefficientMap = std::map<MultiIndex, Complex, GradedLex>;

    TaylorPolynomial(int dimension, int degree);

    int dimension() const { return dimension_; }
    int degree() const { return degree_; }
    const CoefficientMap& coefficients() const { return coefficients_; }

    Complex coefficient(const MultiIndex& m) const;
    void set_coefficient(const MultiIndex& m, Complex value);

    Complex constant_term() const;

    /// Restriction to |m| = k.
    TaylorPolynomial homogeneous_part(int k) const;

    /// Largest |m| with a stored coefficient; -1 for the zero polynomial.
    int top_order() const;

    bool is_zero() const { return coefficients_.empty(); }

    static TaylorPolynomial zero(int n, int degree = 0);
    static TaylorPolynomial constant(int n, Complex c, int degree = 0);
    static TaylorPolynomial monomial(const MultiIndex& m, Complex c = Complex(1.0));

private:
    int dimension_ = 1;
    int degree_ = 0;
    CoefficientMap coefficients_;
};

TaylorPolynomial add(const TaylorPolynomial& f, const TaylorPolynomial& g);
TaylorPolynomial scale(const TaylorPolynomial& f, Complex c);

/// Cauchy product with every term of total degree > degree discarded.
TaylorPolynomial multiply_truncated(const TaylorPolynomial& f,
                                    const TaylorPolynomial& g, int degree);

/// Sum of a_m z^m by ascending homogeneous order, lexicographic within
/// each order.
Complex evaluate(const TaylorPolynomial& f, const BallPoint& z);

/// Truncated expansion of (1 - <z,w>)^{-c}: the coefficient of z^m is
/// [(c)_{|m|}/|m|!] * (|m|!/m!) * conj(w)^m, with the Pochhammer factor
/// built by recurrence so the series terminates cleanly when c is zero or
/// a negative integer.
TaylorPolynomial power_kernel_series(double c, const BallPoint& w, int degree);

/// Truncated expansion of 1 + log(1/(1 - <z,w>)): the coefficient of z^m
/// with |m| = k > 0 is (|m|!/(m!|m|)) * conj(w)^m.
TaylorPolynomial log_kernel_series(const BallPoint& w, int degree);

} // namespace bergman
