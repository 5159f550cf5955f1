#pragma once

#include "bregkern/core/manifold.hpp"

#include <cmath>
#include <concepts>
#include <string>

namespace bregkern {

/// Anything that scores an ordered pair of points.
template <class D>
concept Dissimilarity = requires(const D& d, const Point& p, const Point& q) {
    { d(p, q) } -> std::convertible_to<double>;
};

/// B_G(x1 : x2) = G(x1) - G(x2) - <x1 - x2, grad G(x2)>.
[[nodiscard]] inline double bregman_divergence(const Generator& g, const Vector& x1, const Vector& x2) {
    return g.value(x1) - g.value(x2) - (x1 - x2).dot(g.gradient(x2));
}

/// Bregman divergence with the generator selected by dc (F for primal, F* for dual).
[[nodiscard]] inline double bregman_divergence(const BregmanManifold& m, const Point& p, const Point& q,
                                               DualCoordinate dc = DualCoordinate::primal) {
    return bregman_divergence(m.generator(dc), m.coords(p, dc), m.coords(q, dc));
}

/// Y(theta_1, eta_2) = F(theta_1) + F*(eta_2) - <theta_1, eta_2>.
[[nodiscard]] inline double fenchel_young_divergence(const BregmanManifold& m, const Point& p_theta,
                                                     const Point& q_eta) {
    const Vector theta = m.coords(p_theta, DualCoordinate::primal);
    const Vector eta = m.coords(q_eta, DualCoordinate::dual);
    return m.theta_generator().value(theta) + m.generator(DualCoordinate::dual).value(eta) - theta.dot(eta);
}

/// Jensen gap (1+alpha)/2 G(x1) + (1-alpha)/2 G(x2) - G((1+alpha)/2 x1 + (1-alpha)/2 x2),
/// optionally scaled by 4 / (1 - alpha^2).
///
/// At alpha = -1 the scaled form is B_G(x1 : x2) and at alpha = +1 it is
/// B_G(x2 : x1), the limits of the scaled gap.
[[nodiscard]] inline double skew_jensen_divergence(const BregmanManifold& m, const Point& p, const Point& q,
                                                   double alpha, DualCoordinate dc = DualCoordinate::primal,
                                                   bool scaled = true) {
    if (!(std::abs(alpha) <= 1.0))
        throw ArgumentError("skew parameter must lie in [-1, 1], got " + std::to_string(alpha));
    const Generator& g = m.generator(dc);
    const Vector x1 = m.coords(p, dc);
    const Vector x2 = m.coords(q, dc);
    if (scaled && alpha == -1.0)
        return bregman_divergence(g, x1, x2);
    if (scaled && alpha == 1.0)
        return bregman_divergence(g, x2, x1);
    const double w1 = 0.5 * (1.0 + alpha);
    const double w2 = 0.5 * (1.0 - alpha);
    const Vector mix = w1 * x1 + w2 * x2;
    const double gap = w1 * g.value(x1) + w2 * g.value(x2) - g.value(mix);
    return scaled ? 4.0 / (1.0 - alpha * alpha) * gap : gap;
}

/// F(theta_1)/2 + F(theta_2)/2 - F((theta_1 + theta_2)/2).
[[nodiscard]] inline double bhattacharyya_distance(const BregmanManifold& m, const Point& p, const Point& q) {
    return skew_jensen_divergence(m, p, q, 0.0, DualCoordinate::primal, false);
}

} // namespace bregkern
