#include "bregkern/bregkern.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <regex>

namespace bk = bregkern;
using DC = bk::DualCoordinate;

namespace {

bk::Vector v2(double a, double b) { return (bk::Vector(2) << a, b).finished(); }

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1))
        ++n;
    return n;
}

} // namespace

TEST(Curve, SamplingAndRange) {
    const bk::Curve c([](double t) { return bk::Point(bk::theta_coords, v2(t, t * t)); });
    const auto pts = c.sample(4);
    ASSERT_EQ(pts.size(), 5u);
    EXPECT_EQ(pts[2].data, v2(0.5, 0.25));
    EXPECT_EQ(c(1.0).data, v2(1, 1));
    EXPECT_EQ(c.sample().size(), 257u);
    EXPECT_THROW((void)c.at(-0.1), bk::ArgumentError);
}

TEST(Scene, ProjectionAndValidation) {
    const bk::GaussianManifold g(1);
    const bk::Point p(bk::lambda_coords, v2(0.5, 2.0));
    bk::Scene s(g, bk::eta_coords, {1, 0});
    const bk::Vec2 xy = s.project(p);
    EXPECT_NEAR(xy.x(), 2.0 + 0.25, 1e-14); // second moment
    EXPECT_NEAR(xy.y(), 0.5, 1e-15);
    EXPECT_THROW(bk::Scene(g, bk::eta_coords, {0, 0}), bk::ArgumentError);
    EXPECT_THROW(bk::Scene(g, bk::eta_coords, {0, 2}), bk::ArgumentError);

    bk::Scene bare(std::nullopt, bk::theta_coords);
    EXPECT_EQ(bare.project(bk::Point(bk::theta_coords, v2(3, 4))), bk::Vec2(3, 4));
    EXPECT_THROW((void)bare.project(bk::Point(bk::eta_coords, v2(3, 4))), bk::ConversionError);
    EXPECT_THROW(bare.add_tissot(bk::Point(bk::theta_coords, v2(3, 4)), 1.0), bk::ArgumentError);
}

TEST(Scene, TissotEllipseIsMetricLevelSet) {
    const bk::PSDManifold m(2);
    const bk::Point p = m.point((bk::Matrix(2, 2) << 1.0, 0.3, 0.3, 2.0).finished());
    for (const auto& tag : {bk::theta_coords, bk::eta_coords, bk::lambda_coords}) {
        bk::Scene s(m, tag, {0, 2});
        const auto e = s.tissot(p, 0.2);
        for (const auto& v : e.boundary(32)) {
            const bk::Vec2 d = v - e.center;
            EXPECT_NEAR(d.dot(e.shape * d), 0.04, 1e-12);
        }
    }
    // lambda equals theta up to the off-diagonal sqrt(2): the pulled-back metric must agree
    bk::Scene th(m, bk::theta_coords, {0, 2}), la(m, bk::lambda_coords, {0, 2});
    EXPECT_LT((th.display_metric(p) - la.display_metric(p)).norm(), 1e-6);
    EXPECT_THROW((void)th.tissot(p, 0.0), bk::ArgumentError);
}

TEST(Scene, PulledBackMetricMatchesFiniteDifferenceOracle) {
    const bk::GaussianManifold g(1);
    const bk::Point p(bk::lambda_coords, v2(0.4, 1.7));
    bk::Scene s(g, bk::lambda_coords);
    // Fisher metric of N(mu, v): diag(1/v, 1/(2 v^2))
    const Eigen::Matrix2d gm = s.display_metric(p);
    EXPECT_NEAR(gm(0, 0), 1.0 / 1.7, 1e-7);
    EXPECT_NEAR(gm(1, 1), 1.0 / (2.0 * 1.7 * 1.7), 1e-7);
    EXPECT_NEAR(gm(0, 1), 0.0, 1e-7);
}

TEST(Scene, BisectorPolylineLiesOnHyperplane) {
    const bk::GaussianManifold g(1);
    const bk::Point p(bk::lambda_coords, v2(0, 1)), q(bk::lambda_coords, v2(1, 1.5));
    const auto b = bk::bisector(g, p, q, DC::dual);
    bk::Scene s(g, bk::eta_coords);
    s.add_bisector(b);
    ASSERT_EQ(s.polylines().size(), 1u);
    const auto& xy = s.polylines()[0].xy;
    EXPECT_GT(xy.size(), 100u);
    for (const auto& v : xy)
        EXPECT_NEAR(b.residual(bk::Vector(v)), 0.0, 1e-10);
}

TEST(Svg, StructureAndDeterminism) {
    const bk::GaussianManifold g(1);
    const bk::Point p(bk::lambda_coords, v2(0, 1)), q(bk::lambda_coords, v2(1, 1.5));
    auto build = [&] {
        bk::Scene s(g, bk::eta_coords);
        s.add_curve(bk::geodesic(g, p, q, DC::primal).curve(), {"#1f77b4", 1.0, "primal <geodesic>"});
        s.add_tissot(p, 0.1);
        s.add_point(p, {"red", 1.0, "p"});
        s.add_point(q);
        return bk::render_svg(s);
    };
    const std::string a = build();
    EXPECT_EQ(a, build());
    EXPECT_EQ(a.rfind("<?xml", 0), 0u);
    EXPECT_NE(a.find("viewBox=\"0 0 800 600\""), std::string::npos);
    EXPECT_EQ(count(a, "<polyline"), 1u);
    EXPECT_EQ(count(a, "<polygon"), 1u);
    EXPECT_EQ(count(a, "<circle"), 2u);
    EXPECT_NE(a.find("primal &lt;geodesic&gt;"), std::string::npos);
    EXPECT_EQ(a.substr(a.size() - 7), "</svg>\n");
    // every drawn coordinate stays inside the canvas
    const std::regex num(R"((-?\d+\.\d{3}),(-?\d+\.\d{3}))");
    for (auto it = std::sregex_iterator(a.begin(), a.end(), num); it != std::sregex_iterator(); ++it) {
        const double x = std::stod((*it)[1]), y = std::stod((*it)[2]);
        EXPECT_GE(x, 0.0);
        EXPECT_LE(x, 800.0);
        EXPECT_GE(y, 0.0);
        EXPECT_LE(y, 600.0);
    }
}

TEST(Svg, BoundsHandleEmptyAndDegenerateScenes) {
    bk::Scene empty(std::nullopt, bk::theta_coords);
    const auto b = bk::svg::scene_bounds(empty);
    EXPECT_NEAR(b.xmin, -1.1, 1e-15);
    EXPECT_NEAR(b.xmax, 1.1, 1e-15);
    bk::Scene one(std::nullopt, bk::theta_coords);
    one.add_point(bk::Vec2(2.0, 3.0));
    const auto c = bk::svg::scene_bounds(one);
    EXPECT_LT(c.xmin, 2.0);
    EXPECT_GT(c.xmax, 2.0);
    EXPECT_LT(c.ymin, 3.0);
    EXPECT_GT(c.ymax, 3.0);
    EXPECT_NE(bk::render_svg(empty).find("</svg>"), std::string::npos);
}
