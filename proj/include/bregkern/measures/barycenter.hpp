#pragma once

#include "bregkern/core/manifold.hpp"

#include <cmath>
#include <concepts>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace bregkern {

/// Anything that aggregates weighted points into one point.
template <class B>
concept Barycenter = requires(const B& b, const std::vector<Point>& pts, const std::vector<double>& w) {
    { b(pts, w) } -> std::convertible_to<Point>;
};

namespace detail {

/// Weights normalized to sum 1; empty weights mean uniform.
inline std::vector<double> normalized_weights(std::size_t n, std::span<const double> weights) {
    if (n == 0)
        throw ArgumentError("barycenter of an empty point list");
    if (weights.empty())
        return std::vector<double>(n, 1.0 / static_cast<double>(n));
    if (weights.size() != n)
        throw ArgumentError("got " + std::to_string(weights.size()) + " weights for " + std::to_string(n) + " points");
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(weights[i] >= 0.0) || !std::isfinite(weights[i]))
            throw ArgumentError("weights must be finite and non-negative");
        total += weights[i];
    }
    if (!(total > 0.0))
        throw ArgumentError("weights sum to zero");
    std::vector<double> out(weights.begin(), weights.end());
    for (auto& w : out)
        w /= total;
    return out;
}

inline std::vector<Vector> chart(const BregmanManifold& m, const std::vector<Point>& points, DualCoordinate dc) {
    std::vector<Vector> xs;
    xs.reserve(points.size());
    for (const auto& p : points)
        xs.push_back(m.coords(p, dc));
    return xs;
}

inline Vector weighted_mean(const std::vector<Vector>& xs, const std::vector<double>& w) {
    Vector acc = Vector::Zero(xs.front().size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        acc += w[i] * xs[i];
    return acc;
}

} // namespace detail

/// Weighted arithmetic mean in the dc chart: the sided Bregman centroid
/// argmin_x sum_i w_i B_G(x_i : x).
[[nodiscard]] inline Point dual_barycenter(const BregmanManifold& m, const std::vector<Point>& points,
                                           std::span<const double> weights, DualCoordinate dc) {
    const auto w = detail::normalized_weights(points.size(), weights);
    return Point(to_tag(dc), detail::weighted_mean(detail::chart(m, points, dc), w));
}

[[nodiscard]] inline Point dual_barycenter(const BregmanManifold& m, const std::vector<Point>& points,
                                           DualCoordinate dc) {
    return dual_barycenter(m, points, {}, dc);
}

struct CccpOptions {
    std::size_t max_iterations = 1000;
    double tolerance = 1e-10;
};

struct CccpResult {
    Point point;
    std::size_t iterations = 0;
    /// Objective at the initial guess followed by its value after each step.
    std::vector<double> objective;
};

/// sum_i w_i [alpha G(x) + (1 - alpha) G(x_i) - G(alpha x + (1 - alpha) x_i)].
[[nodiscard]] inline double skew_burbea_rao_objective(const Generator& g, const Vector& x,
                                                      const std::vector<Vector>& xs, const std::vector<double>& w,
                                                      double alpha) {
    const double gx = g.value(x);
    double acc = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        acc += w[i] * (alpha * gx + (1.0 - alpha) * g.value(xs[i]) - g.value(alpha * x + (1.0 - alpha) * xs[i]));
    return acc;
}

/// Minimizer of the weighted skew Jensen objective by the concave-convex
/// procedure x <- (grad G)^{-1}(sum_i w_i grad G(alpha x + (1 - alpha) x_i)).
[[nodiscard]] inline CccpResult skew_burbea_rao_cccp(const BregmanManifold& m, const std::vector<Point>& points,
                                                     std::span<const double> weights, double alpha, DualCoordinate dc,
                                                     const CccpOptions& opt = {}) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw ArgumentError("skew parameter must lie in (0, 1), got " + std::to_string(alpha));
    const auto w = detail::normalized_weights(points.size(), weights);
    const auto xs = detail::chart(m, points, dc);
    const Generator& g = m.generator(dc);
    const Generator& inv = m.generator(opposite(dc));

    Vector x = detail::weighted_mean(xs, w);
    CccpResult out{Point(to_tag(dc), x), 0, {skew_burbea_rao_objective(g, x, xs, w, alpha)}};
    for (std::size_t it = 1; it <= opt.max_iterations; ++it) {
        Vector acc = Vector::Zero(x.size());
        for (std::size_t i = 0; i < xs.size(); ++i)
            acc += w[i] * g.gradient(alpha * x + (1.0 - alpha) * xs[i]);
        Vector next = inv.gradient(acc);
        g.require_domain(next);
        const double change = (next - x).cwiseAbs().maxCoeff();
        x = std::move(next);
        out.objective.push_back(skew_burbea_rao_objective(g, x, xs, w, alpha));
        if (change < opt.tolerance) {
            out.point = Point(to_tag(dc), x);
            out.iterations = it;
            return out;
        }
    }
    throw ConvergenceError("skew Burbea-Rao barycenter", opt.max_iterations,
                           std::vector<double>(x.data(), x.data() + x.size()));
}

[[nodiscard]] inline Point skew_burbea_rao_barycenter(const BregmanManifold& m, const std::vector<Point>& points,
                                                      std::span<const double> weights, double alpha,
                                                      DualCoordinate dc) {
    return skew_burbea_rao_cccp(m, points, weights, alpha, dc).point;
}

/// Primal midpoints of the inductive primal/dual midpoint scheme, one per iteration.
[[nodiscard]] inline std::vector<Point> inductive_midpoint_sequence(const BregmanManifold& m, const Point& p,
                                                                    const Point& q, std::size_t iterations) {
    if (iterations == 0)
        throw ArgumentError("need at least one iteration");
    Vector a = m.coords(p, DualCoordinate::primal);
    Vector b = m.coords(q, DualCoordinate::primal);
    std::vector<Point> out;
    out.reserve(iterations);
    for (std::size_t k = 0; k < iterations; ++k) {
        const Vector arith = 0.5 * (a + b);
        const Vector harm = m.eta_to_theta(0.5 * (m.theta_to_eta(a) + m.theta_to_eta(b)));
        a = arith;
        b = harm;
        out.emplace_back(theta_coords, a);
    }
    return out;
}

/// (p, q) <- (primal midpoint, dual midpoint), repeated; returns the last primal midpoint.
[[nodiscard]] inline Point inductive_midpoint_mean(const BregmanManifold& m, const Point& p, const Point& q,
                                                   std::size_t iterations) {
    return inductive_midpoint_sequence(m, p, q, iterations).back();
}

} // namespace bregkern
