#pragma once

#include "bregkern/geometry/curve.hpp"
#include "bregkern/manifolds/gaussian.hpp"

#include <cmath>

namespace bregkern {

/// Affine-invariant SPD geodesic A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2}.
[[nodiscard]] inline Matrix spd_geodesic(const Matrix& a, const Matrix& b, double t) {
    require_spd(a, "first SPD endpoint");
    require_spd(b, "second SPD endpoint");
    const Matrix s = spd_sqrt(a);
    const Matrix si = spd_inv_sqrt(a);
    Matrix inner = si * b * si;
    inner = 0.5 * (inner + inner.transpose());
    Matrix out = s * spd_power(inner, t) * s;
    return 0.5 * (out + out.transpose());
}

/// A # B, the midpoint of the affine-invariant geodesic.
[[nodiscard]] inline Matrix spd_geometric_mean(const Matrix& a, const Matrix& b) { return spd_geodesic(a, b, 0.5); }

/// Closed-form Fisher-Rao distance between univariate normals.
[[nodiscard]] inline double fisher_rao_distance_uni(const GaussianManifold& g, const Point& p, const Point& q) {
    if (g.sample_dimension() != 1)
        throw ArgumentError("univariate Fisher-Rao distance needs d = 1");
    const double v1 = g.covariance(p)(0, 0);
    const double v2 = g.covariance(q)(0, 0);
    if (!(v1 > 0.0))
        throw DomainError("variance must be positive", 1);
    if (!(v2 > 0.0))
        throw DomainError("variance must be positive", 1);
    const double s1 = std::sqrt(v1);
    const double s2 = std::sqrt(v2);
    const double dm = g.mean(p)[0] - g.mean(q)[0];
    // Poincare half-plane distance between (mu/sqrt2, sigma) points, scaled by sqrt 2
    const double num = 0.5 * dm * dm + (s1 - s2) * (s1 - s2);
    return std::sqrt(2.0) * std::acosh(1.0 + num / (2.0 * s1 * s2));
}

enum class FisherRaoMethod { spd_embedding };

namespace detail {

inline Matrix gaussian_embedding(const Vector& mu, const Matrix& cov) {
    const auto d = mu.size();
    Matrix p(d + 1, d + 1);
    p.topLeftCorner(d, d) = cov + mu * mu.transpose();
    p.topRightCorner(d, 1) = mu;
    p.bottomLeftCorner(1, d) = mu.transpose();
    p(d, d) = 1.0;
    return p;
}

} // namespace detail

/// Approximate Fisher-Rao geodesic between two normals, tagged lambda.
///
/// N(mu, Sigma) is embedded as [[Sigma + mu mu^T, mu], [mu^T, 1]]; the curve
/// follows the SPD geodesic and reads (mu, Sigma) back after rescaling the
/// corner entry to 1.
[[nodiscard]] inline Curve fisher_rao_geodesic(const GaussianManifold& g, const Point& p, const Point& q,
                                               FisherRaoMethod method = FisherRaoMethod::spd_embedding) {
    (void)method;
    const Vector m0 = g.mean(p);
    const Vector m1 = g.mean(q);
    const Matrix c0 = g.covariance(p);
    const Matrix c1 = g.covariance(q);
    require_spd(c0, "covariance");
    require_spd(c1, "covariance");
    const Matrix e0 = detail::gaussian_embedding(m0, c0);
    const Matrix e1 = detail::gaussian_embedding(m1, c1);
    const Matrix s = spd_sqrt(e0);
    const Matrix si = spd_inv_sqrt(e0);
    Matrix inner = si * e1 * si;
    inner = 0.5 * (inner + inner.transpose());
    const Eigen::SelfAdjointEigenSolver<Matrix> eig(inner);
    const Matrix vecs = eig.eigenvectors();
    const Vector vals = eig.eigenvalues().cwiseMax(detail::eigen_floor);
    const auto d = static_cast<Eigen::Index>(g.sample_dimension());
    return Curve([=](double t) {
        if (t == 0.0)
            return Point(lambda_coords, detail::join(m0, c0, SymLayout::plain));
        if (t == 1.0)
            return Point(lambda_coords, detail::join(m1, c1, SymLayout::plain));
        Matrix pt = s * vecs * vals.array().pow(t).matrix().asDiagonal() * vecs.transpose() * s;
        pt = 0.5 * (pt + pt.transpose());
        pt /= pt(d, d);
        const Vector mu = pt.topRightCorner(d, 1);
        const Matrix cov = pt.topLeftCorner(d, d) - mu * mu.transpose();
        return Point(lambda_coords, detail::join(mu, cov, SymLayout::plain));
    });
}

} // namespace bregkern
