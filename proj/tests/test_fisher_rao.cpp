#include "bregkern/bregkern.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace bk = bregkern;

namespace {

bk::Point uni(double mu, double var) { return bk::Point(bk::lambda_coords, (bk::Vector(2) << mu, var).finished()); }

/// Fisher-Rao length of a univariate curve: sqrt(dmu^2 + 2 dsigma^2) / sigma.
double curve_length(const bk::GaussianManifold& g, const bk::Curve& c) {
    auto sigma_mu = [&](double t) {
        const bk::Vector l = g.convert(c.at(t), bk::lambda_coords).data;
        return std::pair<double, double>(l[0], std::sqrt(l[1]));
    };
    return oracle::simpson(
        [&](double t) {
            const double h = 1e-6;
            const double a = std::max(0.0, t - h), b = std::min(1.0, t + h);
            const auto [m0, s0] = sigma_mu(a);
            const auto [m1, s1] = sigma_mu(b);
            const auto [m, s] = sigma_mu(t);
            const double dm = (m1 - m0) / (b - a), ds = (s1 - s0) / (b - a);
            return std::sqrt(dm * dm + 2.0 * ds * ds) / s;
        },
        0.0, 1.0, 2000);
}

} // namespace

TEST(FisherRao, UnivariateClosedForm) {
    const bk::GaussianManifold g(1);
    EXPECT_NEAR(bk::fisher_rao_distance_uni(g, uni(0, 1), uni(0, 4)), std::sqrt(2.0) * std::log(2.0), 1e-12);
    EXPECT_NEAR(bk::fisher_rao_distance_uni(g, uni(0, 1), uni(0, 4)), 0.980258, 1e-6);
    EXPECT_EQ(bk::fisher_rao_distance_uni(g, uni(0.3, 2), uni(0.3, 2)), 0.0);
    EXPECT_NEAR(bk::fisher_rao_distance_uni(g, uni(1, 1), uni(3, 2)), bk::fisher_rao_distance_uni(g, uni(-5, 1), uni(-3, 2)),
                1e-12);
    EXPECT_THROW((void)bk::fisher_rao_distance_uni(bk::GaussianManifold(2), uni(0, 1), uni(0, 1)), bk::ArgumentError);
}

TEST(FisherRao, MetricAxioms) {
    std::mt19937_64 rng(61);
    const bk::GaussianManifold g(1);
    std::uniform_real_distribution<double> mu(-3, 3), var(0.1, 5);
    for (int i = 0; i < 200; ++i) {
        const auto a = uni(mu(rng), var(rng)), b = uni(mu(rng), var(rng)), c = uni(mu(rng), var(rng));
        const double ab = bk::fisher_rao_distance_uni(g, a, b);
        EXPECT_NEAR(ab, bk::fisher_rao_distance_uni(g, b, a), 1e-12);
        EXPECT_GT(ab, 0.0);
        EXPECT_LE(ab, bk::fisher_rao_distance_uni(g, a, c) + bk::fisher_rao_distance_uni(g, c, b) + 1e-12);
    }
}

TEST(FisherRao, UnivariateDistanceIsHalfPlaneGeodesicLength) {
    // the closed form equals the length of the half-plane geodesic between the points
    const bk::GaussianManifold g(1);
    const double m1 = -1.0, s1 = 0.8, m2 = 2.0, s2 = 1.7;
    // circle through (m/sqrt2, s) centered on the axis
    const double x1 = m1 / std::sqrt(2.0), x2 = m2 / std::sqrt(2.0);
    const double c = (x2 * x2 + s2 * s2 - x1 * x1 - s1 * s1) / (2.0 * (x2 - x1));
    const double r = std::hypot(x1 - c, s1);
    const double a1 = std::atan2(s1, x1 - c), a2 = std::atan2(s2, x2 - c);
    const double len = oracle::simpson([&](double t) {
        const double a = a1 + t * (a2 - a1);
        return std::sqrt(2.0) * r * std::abs(a2 - a1) / (r * std::sin(a));
    }, 0.0, 1.0);
    EXPECT_NEAR(bk::fisher_rao_distance_uni(g, uni(m1, s1 * s1), uni(m2, s2 * s2)), len, 1e-9);
}

TEST(FisherRao, GeodesicEndpoints) {
    const bk::GaussianManifold g(2);
    bk::Matrix s(2, 2);
    s << 1.0, 0.2, 0.2, 0.7;
    const bk::Point p = g.point((bk::Vector(2) << 0.5, -1).finished(), s);
    const bk::Point q = g.point((bk::Vector(2) << -1, 2).finished(), 2.0 * bk::Matrix::Identity(2, 2));
    const bk::Curve c = bk::fisher_rao_geodesic(g, p, q);
    EXPECT_LT((c.at(0.0).data - p.data).norm(), 1e-12);
    EXPECT_LT((c.at(1.0).data - q.data).norm(), 1e-12);
    EXPECT_LT((c.at(1e-9).data - p.data).norm(), 1e-7);
    for (const auto& pt : c.sample(16))
        EXPECT_TRUE(bk::is_spd(g.covariance(pt)));
    const bk::Curve same = bk::fisher_rao_geodesic(g, p, p);
    EXPECT_LT((same.at(0.37).data - p.data).norm(), 1e-12);
}

TEST(FisherRao, SameMeanGeodesicLength) {
    const bk::GaussianManifold g(1);
    for (const auto& [v0, v1] : std::vector<std::pair<double, double>>{{1, 4}, {0.5, 3}, {2, 0.2}}) {
        const auto p = uni(0.4, v0), q = uni(0.4, v1);
        const bk::Curve c = bk::fisher_rao_geodesic(g, p, q);
        for (const auto& pt : c.sample(32))
            EXPECT_NEAR(pt.data[0], 0.4, 1e-12);
        EXPECT_NEAR(curve_length(g, c), bk::fisher_rao_distance_uni(g, p, q), 1e-3);
    }
}

TEST(FisherRao, SharedMeanFollowsSpdGeodesic) {
    std::mt19937_64 rng(67);
    for (int d : {2, 3}) {
        const bk::GaussianManifold g(static_cast<std::size_t>(d));
        const bk::Vector mu = oracle::random_vector(d, rng);
        const bk::Matrix s0 = oracle::random_spd(d, rng, 0.3, 3), s1 = oracle::random_spd(d, rng, 0.3, 3);
        const bk::Curve c = bk::fisher_rao_geodesic(g, g.point(mu, s0), g.point(mu, s1));
        for (double t : {0.1, 0.25, 0.5, 0.8}) {
            const bk::Point pt = c.at(t);
            EXPECT_LT((g.covariance(pt) - oracle::spd_geodesic(s0, s1, t)).norm(), 1e-8);
            EXPECT_LT((g.mean(pt) - mu).norm(), 1e-8);
        }
    }
}

TEST(SpdGeometricMean, Examples) {
    std::mt19937_64 rng(71);
    const bk::Matrix a = oracle::random_spd(3, rng);
    EXPECT_LT((bk::spd_geometric_mean(a, a) - a).norm(), 1e-12);
    const bk::Matrix b = oracle::random_spd(3, rng);
    EXPECT_LT((bk::spd_geometric_mean(bk::Matrix::Identity(3, 3), b) - oracle::sym_fn(b, [](double x) { return std::sqrt(x); })).norm(), 1e-12);
    bk::Matrix d1 = bk::Matrix::Zero(2, 2), d2 = bk::Matrix::Zero(2, 2);
    d1.diagonal() << 1, 4;
    d2.diagonal() << 4, 1;
    EXPECT_LT((bk::spd_geometric_mean(d1, d2) - 2.0 * bk::Matrix::Identity(2, 2)).norm(), 1e-14);
    // Riccati characterization X A^{-1} X = B
    const bk::Matrix x = bk::spd_geometric_mean(a, b);
    EXPECT_LT((x * a.inverse() * x - b).norm(), 1e-10);
    EXPECT_THROW((void)bk::spd_geometric_mean(a, -b), bk::DomainError);
}
