#include "bergman/ball_geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace bergman {

BallPoint mobius(const BallPoint& a, const BallPoint& z) {
    if (a.dimension() != z.dimension())
        throw std::invalid_argument("mobius: dimension mismatch");
    const std::size_t n = a.coordinates().size();
    const double a_sq = norm_sq(a.coordinates());
    if (a_sq == 0.0) {
        CVector out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = -z[i];
        return BallPoint(std::move(out));
    }
    const Complex za = herm_pair(z, a);
    const double s = std::sqrt(1.0 - a_sq);
    const Complex projection_scale = za / a_sq;
    CVector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Complex proj = projection_scale * a[i];
        const Complex orth = z[i] - proj;
        out[i] = (a[i] - proj - s * orth) / (1.0 - za);
    }
    return BallPoint(std::move(out));
}

double bergman_dist(const BallPoint& z, const BallPoint& w) {
    const double r = mobius(z, w).abs();
    return 0.5 * std::log((1.0 + r) / (1.0 - r));
}

} // namespace bergman
