#pragma once

#include "bergman/series.hpp"

namespace bergman {

/// The ball automorphism phi_a in projection/orthogonal-decomposition form:
///   phi_a(z) = (a - P_a z - sqrt(1-|a|^2) Q_a z) / (1 - <z,a>),
/// an involution with phi_a(0) = a, phi_a(a) = 0 and
///   1 - |phi_a(z)|^2 = (1-|a|^2)(1-|z|^2) / |1-<z,a>|^2.
BallPoint mobius(const BallPoint& a, const BallPoint& z);

/// Bergman-metric distance (1/2) log((1+|phi_z(w)|)/(1-|phi_z(w)|)).
double bergman_dist(const BallPoint& z, const BallPoint& w);

} // namespace bergman
