#pragma once

#include "bregkern/geometry/curve.hpp"
#include "bregkern/geometry/lambert_w.hpp"
#include "bregkern/measures/divergence.hpp"

#include <array>
#include <cmath>
#include <string>

namespace bregkern {

/// {x : B_G(center : x) < radius} with G selected by dcoords.
class BregmanBall {
  public:
    BregmanBall(const BregmanManifold& m, const Point& center, double radius, DualCoordinate dc = DualCoordinate::primal)
        : m_(m), center_(center), radius_(radius), dc_(dc), c_(m.coords(center, dc)) {
        if (!(radius >= 0.0) || !std::isfinite(radius))
            throw ArgumentError("ball radius must be finite and non-negative");
    }

    [[nodiscard]] const Point& center() const noexcept { return center_; }
    [[nodiscard]] double radius() const noexcept { return radius_; }
    [[nodiscard]] DualCoordinate dcoords() const noexcept { return dc_; }

    [[nodiscard]] double divergence_to(const Point& x) const {
        return bregman_divergence(m_.generator(dc_), c_, m_.coords(x, dc_));
    }

    [[nodiscard]] bool is_in(const Point& x) const { return divergence_to(x) < radius_; }

  private:
    BregmanManifold m_;
    Point center_;
    double radius_;
    DualCoordinate dc_;
    Vector c_;
};

[[nodiscard]] inline bool ball_is_in(const BregmanBall& ball, const Point& x) { return ball.is_in(x); }

namespace detail {

/// x > 0 with c log(c / x) - c + x = rho on the given Lambert branch
/// (principal: x <= c, lower: x >= c).
inline double ekl_coordinate(double c, double rho, LambertBranch branch) {
    if (rho <= 0.0)
        return c;
    const double z = -std::exp(-1.0 - rho / c);
    return -c * lambert_w(branch, z);
}

struct EklArc {
    LambertBranch b1, b2;
    bool descending;
};

// (principal, principal), (lower, principal), (lower, lower), (principal, lower)
inline constexpr std::array<EklArc, 4> ekl_arcs{{{LambertBranch::principal, LambertBranch::principal, true},
                                                 {LambertBranch::lower, LambertBranch::principal, false},
                                                 {LambertBranch::lower, LambertBranch::lower, true},
                                                 {LambertBranch::principal, LambertBranch::lower, false}}};

} // namespace detail

/// Boundary of the extended-KL sphere {x : sum_i c_i log(c_i / x_i) - c_i + x_i = r}
/// around a positive 2-D center, in theta (= lambda) coordinates.
///
/// The budget r is split as (r s, r (1 - s)) and each coordinate is solved
/// with one Lambert branch; four arcs, one per branch pair, close the curve.
[[nodiscard]] inline Curve ekl_ball_curve(const Point& center, double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw ArgumentError("sphere radius must be positive, got " + std::to_string(radius));
    if (center.size() != 2)
        throw DomainError("extended-KL sphere needs a 2-D center");
    const Vector c = center.data;
    for (Eigen::Index i = 0; i < 2; ++i)
        if (!(c[i] > 0.0))
            throw DomainError("extended-KL center must be positive", static_cast<std::size_t>(i));
    return Curve([c, radius](double t) {
        const double scaled = 4.0 * t;
        const auto j = std::min<std::size_t>(3, static_cast<std::size_t>(scaled));
        const double u = scaled - static_cast<double>(j);
        const detail::EklArc& arc = detail::ekl_arcs[j];
        const double s = arc.descending ? 1.0 - u : u;
        Vector x(2);
        x[0] = detail::ekl_coordinate(c[0], radius * s, arc.b1);
        x[1] = detail::ekl_coordinate(c[1], radius * (1.0 - s), arc.b2);
        return Point(theta_coords, x);
    });
}

} // namespace bregkern
