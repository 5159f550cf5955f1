#pragma once

#include "bregkern/core/manifold.hpp"
#include "bregkern/geometry/bisector.hpp"
#include "bregkern/geometry/curve.hpp"

#include <Eigen/Cholesky>

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bregkern {

struct Style {
    Style() = default;
    Style(std::string color_, double opacity_ = 1.0, std::string label_ = {}, double width_ = 1.5)
        : color(std::move(color_)), opacity(opacity_), label(std::move(label_)), width(width_) {}
    Style(const char* color_) : Style(std::string(color_)) {}

    std::string color = "#1f77b4";
    double opacity = 1.0;
    std::string label;
    double width = 1.5;
};

using Vec2 = Eigen::Vector2d;

struct ScenePoint {
    Vec2 xy;
    Style style;
};

struct ScenePolyline {
    std::vector<Vec2> xy;
    Style style;
};

/// Ellipse {v : (v - c)^T G (v - c) = scale^2} in display coordinates.
struct TissotEllipse {
    Vec2 center;
    Eigen::Matrix2d shape;
    double scale = 1.0;

    /// n boundary points, evenly spaced in angle on the pre-image circle.
    [[nodiscard]] std::vector<Vec2> boundary(std::size_t n = 64) const {
        const Eigen::LLT<Eigen::Matrix2d> llt(shape);
        if (llt.info() != Eigen::Success)
            throw DomainError("Tissot shape matrix is not positive definite");
        // G = L L^T, so v = c + scale L^{-T} u maps the unit circle onto the ellipse
        const Eigen::Matrix2d lt = llt.matrixU();
        std::vector<Vec2> out;
        out.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            const double a = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
            const Vec2 u(std::cos(a), std::sin(a));
            out.push_back(center + scale * lt.triangularView<Eigen::Upper>().solve(u));
        }
        return out;
    }
};

/// Drawables projected onto two coordinates of one display chart.
class Scene {
  public:
    Scene(std::optional<BregmanManifold> manifold, CoordinateTag display, std::array<std::size_t, 2> index = {0, 1})
        : m_(std::move(manifold)), display_(std::move(display)), index_(index) {
        if (index_[0] == index_[1])
            throw ArgumentError("projection needs two distinct indices");
        if (m_) {
            const auto dim = m_->atlas().dimension(display_);
            if (index_[0] >= dim || index_[1] >= dim)
                throw ArgumentError("projection index exceeds display dimension " + std::to_string(dim));
        }
    }

    [[nodiscard]] const CoordinateTag& display() const noexcept { return display_; }
    [[nodiscard]] const std::array<std::size_t, 2>& index() const noexcept { return index_; }
    [[nodiscard]] const std::vector<ScenePoint>& points() const noexcept { return points_; }
    [[nodiscard]] const std::vector<ScenePolyline>& polylines() const noexcept { return polylines_; }
    [[nodiscard]] const std::vector<ScenePolyline>& polygons() const noexcept { return polygons_; }

    /// Point converted to the display chart and projected.
    [[nodiscard]] Vec2 project(const Point& p) const {
        const Vector v = to_display(p);
        return {v[static_cast<Eigen::Index>(index_[0])], v[static_cast<Eigen::Index>(index_[1])]};
    }

    void add_point(const Point& p, Style style = {}) { points_.push_back({project(p), std::move(style)}); }

    void add_point(const Vec2& xy, Style style = {}) { points_.push_back({xy, std::move(style)}); }

    void add_curve(const Curve& c, Style style = {}, std::size_t samples = 256) {
        ScenePolyline line{{}, std::move(style)};
        for (const auto& p : c.sample(samples))
            line.xy.push_back(project(p));
        polylines_.push_back(std::move(line));
    }

    void add_polyline(std::vector<Vec2> xy, Style style = {}) { polylines_.push_back({std::move(xy), std::move(style)}); }

    void add_polygon(std::vector<Vec2> xy, Style style = {}) { polygons_.push_back({std::move(xy), std::move(style)}); }

    /// Hyperplane sampled by solving for one coordinate over a grid of another.
    ///
    /// The grid spans the chart extent of p and q padded by that extent on each
    /// side; remaining coordinates are held at the midpoint of p and q. Grid
    /// points that leave the generator domain are dropped.
    void add_bisector(const BregmanBisector& b, Style style = {}, std::size_t samples = 256) {
        const BregmanManifold& m = manifold();
        const DualCoordinate dc = b.dcoords();
        const Vector xp = m.coords(b.p(), dc);
        const Vector xq = m.coords(b.q(), dc);
        const Vector& n = b.normal();
        auto i = static_cast<Eigen::Index>(index_[0]);
        auto j = static_cast<Eigen::Index>(index_[1]);
        if (std::abs(n[j]) > std::abs(n[i]))
            std::swap(i, j);
        if (to_tag(dc) != display_) {
            // solve for the largest normal component, sweep the next largest
            n.cwiseAbs().maxCoeff(&i);
            j = i == 0 ? 1 : 0;
            for (Eigen::Index k = 0; k < n.size(); ++k)
                if (k != i && std::abs(n[k]) > std::abs(n[j]))
                    j = k;
        }
        if (n[i] == 0.0)
            throw DegenerateBisectorError();
        const double lo = std::min(xp[j], xq[j]);
        const double hi = std::max(xp[j], xq[j]);
        const double pad = std::max(hi - lo, 1e-3);
        const Vector mid = 0.5 * (xp + xq);
        ScenePolyline line{{}, std::move(style)};
        for (std::size_t k = 0; k <= samples; ++k) {
            Vector x = mid;
            x[j] = lo - pad + (hi - lo + 2.0 * pad) * static_cast<double>(k) / static_cast<double>(samples);
            const double rest = x.dot(n) - x[i] * n[i];
            x[i] = (b.offset() - rest) / n[i];
            if (m.generator(dc).domain_violation(x))
                continue;
            try {
                line.xy.push_back(project(Point(to_tag(dc), x)));
            } catch (const Error&) {
            }
        }
        polylines_.push_back(std::move(line));
    }

    /// Metric of the display chart restricted to the projection indices.
    [[nodiscard]] Eigen::Matrix2d display_metric(const Point& p) const {
        const BregmanManifold& m = manifold();
        Matrix g;
        if (display_ == theta_coords || display_ == eta_coords) {
            const DualCoordinate dc = display_ == theta_coords ? DualCoordinate::primal : DualCoordinate::dual;
            g = metric_tensor(m, p, dc);
        } else {
            // pull back the theta metric through a central-difference Jacobian
            const Vector x = to_display(p);
            const Vector theta = m.coords(Point(display_, x), DualCoordinate::primal);
            Matrix jac(theta.size(), x.size());
            for (Eigen::Index k = 0; k < x.size(); ++k) {
                const double h = 1e-6 * std::max(1.0, std::abs(x[k]));
                Vector a = x;
                Vector b = x;
                a[k] += h;
                b[k] -= h;
                jac.col(k) = (m.convert(Point(display_, a), theta_coords).data -
                              m.convert(Point(display_, b), theta_coords).data) /
                             (2.0 * h);
            }
            g = jac.transpose() * m.theta_generator().hessian(theta) * jac;
        }
        Eigen::Matrix2d out;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                out(r, c) = g(static_cast<Eigen::Index>(index_[static_cast<std::size_t>(r)]),
                              static_cast<Eigen::Index>(index_[static_cast<std::size_t>(c)]));
        return 0.5 * (out + out.transpose());
    }

    [[nodiscard]] TissotEllipse tissot(const Point& p, double scale) const {
        if (!(scale > 0.0))
            throw ArgumentError("Tissot scale must be positive");
        return {project(p), display_metric(p), scale};
    }

    void add_tissot(const Point& p, double scale, Style style = {}) {
        add_polygon(tissot(p, scale).boundary(64), std::move(style));
    }

  private:
    [[nodiscard]] const BregmanManifold& manifold() const {
        if (!m_)
            throw ArgumentError("this scene has no manifold attached");
        return *m_;
    }

    [[nodiscard]] Vector to_display(const Point& p) const {
        if (m_)
            return m_->convert(p, display_).data;
        if (p.coords != display_)
            throw ConversionError(p.coords.name(), display_.name(), "scene has no manifold to convert with");
        const auto need = std::max(index_[0], index_[1]) + 1;
        if (static_cast<std::size_t>(p.size()) < need)
            throw DomainError("point has fewer coordinates than the projection needs");
        return p.data;
    }

    std::optional<BregmanManifold> m_;
    CoordinateTag display_;
    std::array<std::size_t, 2> index_;
    std::vector<ScenePoint> points_;
    std::vector<ScenePolyline> polylines_;
    std::vector<ScenePolyline> polygons_;
};

} // namespace bregkern
