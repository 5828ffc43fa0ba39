#pragma once

#include "bergman/gamma.hpp"
#include "bergman/series.hpp"

namespace bergman {

// Every operator here is diagonal in the monomial basis: the homogeneous
// part of order j is multiplied by a scalar symbol. No numerical
// differentiation anywhere.

/// R: f_j -> j f_j.
TaylorPolynomial radial_derivative(const TaylorPolynomial& f);

/// R^k, k >= 0: f_j -> j^k f_j; the constant term is annihilated for k >= 1.
TaylorPolynomial radial_power(const TaylorPolynomial& f, int k);

/// R^{-k}, k >= 1: f_j -> j^{-k} f_j for j >= 1, constant term mapped to 0.
TaylorPolynomial radial_antipower(const TaylorPolynomial& f, int k);

/// R^t for real t: f_j -> j^t f_j for j >= 1. The constant term survives
/// only at t = 0.
TaylorPolynomial frac_radial(const TaylorPolynomial& f, double t);

/// f_j multiplied by frac_coeff(params, j).
TaylorPolynomial rst(const TaylorPolynomial& f, const FracOpParams& params);

/// Inverse of rst: f_j divided by frac_coeff(params, j).
TaylorPolynomial rst_inv(const TaylorPolynomial& f, const FracOpParams& params);

/// Term-by-term partial derivative; the truncation degree drops by |m|.
TaylorPolynomial partial_derivative(const TaylorPolynomial& f, const MultiIndex& m);

/// Coefficient multiplier a_m -> |m|^e a_m for |m| > 0; the constant term
/// is preserved.
TaylorPolynomial power_multiplier(const TaylorPolynomial& f, double e);

/// Closed form of R^k applied to (1 - x)^{-b} as a function of x, with R
/// acting as x d/dx. For k >= 1 this is
///   sum_{i=1}^{k} S(k,i) (b)_i x^i (1 - x)^{-b-i},
/// with S the Stirling numbers of the second kind. Supports k <= 12.
Complex power_atom_radial(double b, int k, Complex x);

} // namespace bergman
