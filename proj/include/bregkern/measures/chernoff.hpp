#pragma once

#include "bregkern/measures/divergence.hpp"

#include <cmath>

namespace bregkern {

struct ChernoffOptions {
    double lower = 1e-9;
    double upper = 1.0 - 1e-9;
    std::size_t max_iterations = 200;
    double tolerance = 1e-12;
};

struct ChernoffResult {
    double alpha = 0.5;
    /// B_F(theta_1 : theta_alpha) at the returned alpha.
    double information = 0.0;
    /// B_F(theta_1 : theta_alpha) - B_F(theta_2 : theta_alpha).
    double residual = 0.0;
    std::size_t iterations = 0;
};

namespace detail {

struct ChernoffProblem {
    const Generator& f;
    Vector t1;
    Vector t2;
    double f1;
    double f2;

    [[nodiscard]] Vector point(double alpha) const { return alpha * t1 + (1.0 - alpha) * t2; }

    // B_F(t1 : ta) - B_F(t2 : ta) = F(t1) - F(t2) - <t1 - t2, grad F(ta)>
    [[nodiscard]] double residual(double alpha) const {
        return f1 - f2 - (t1 - t2).dot(f.gradient(point(alpha)));
    }
};

} // namespace detail

/// Chernoff point of two members of an exponential family.
///
/// theta_alpha = alpha theta_1 + (1 - alpha) theta_2 runs along the primal
/// geodesic; alpha* is where it crosses the dual bisector, i.e. where
/// B_F(theta_1 : theta_alpha) = B_F(theta_2 : theta_alpha). Found by bisection.
[[nodiscard]] inline ChernoffResult chernoff(const BregmanManifold& m, const Point& p, const Point& q,
                                             const ChernoffOptions& opt = {}) {
    const Generator& f = m.theta_generator();
    const Vector t1 = m.coords(p, DualCoordinate::primal);
    const Vector t2 = m.coords(q, DualCoordinate::primal);
    ChernoffResult out;
    if ((t1 - t2).cwiseAbs().maxCoeff() == 0.0)
        return out;
    const detail::ChernoffProblem prob{f, t1, t2, f.value(t1), f.value(t2)};
    double lo = opt.lower;
    double hi = opt.upper;
    double r_lo = prob.residual(lo);
    const double r_hi = prob.residual(hi);
    if (!(r_lo > 0.0 && r_hi < 0.0))
        throw ConvergenceError("Chernoff bisection (residual has no sign change on the bracket)", 0);
    std::size_t it = 0;
    while (hi - lo > opt.tolerance) {
        if (it == opt.max_iterations)
            throw ConvergenceError("Chernoff bisection", it, {0.5 * (lo + hi)});
        ++it;
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        const double r = prob.residual(mid);
        if (r == 0.0) {
            lo = hi = mid;
            break;
        }
        if (r > 0.0) {
            lo = mid;
            r_lo = r;
        } else {
            hi = mid;
        }
    }
    out.alpha = 0.5 * (lo + hi);
    out.iterations = it;
    out.residual = prob.residual(out.alpha);
    out.information = bregman_divergence(f, t1, prob.point(out.alpha));
    return out;
}

[[nodiscard]] inline double chernoff_point(const BregmanManifold& m, const Point& p, const Point& q) {
    return chernoff(m, p, q).alpha;
}

[[nodiscard]] inline double chernoff_information(const BregmanManifold& m, const Point& p, const Point& q) {
    return chernoff(m, p, q).information;
}

} // namespace bregkern
