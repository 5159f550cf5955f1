#pragma once

#include "bregkern/core/manifold.hpp"
#include "bregkern/geometry/curve.hpp"

namespace bregkern {

/// Straight segment in the theta (primal) or eta (dual) chart.
class BregmanGeodesic {
  public:
    BregmanGeodesic(const BregmanManifold& m, const Point& source, const Point& dest, DualCoordinate dc)
        : source_(source), dest_(dest), dc_(dc), src_(m.coords(source, dc)), dst_(m.coords(dest, dc)) {}

    [[nodiscard]] DualCoordinate dcoords() const noexcept { return dc_; }
    [[nodiscard]] const Point& source() const noexcept { return source_; }
    [[nodiscard]] const Point& dest() const noexcept { return dest_; }

    [[nodiscard]] Point path(double t) const {
        if (!(t >= 0.0 && t <= 1.0))
            throw ArgumentError("geodesic parameter must lie in [0, 1]");
        return Point(to_tag(dc_), (1.0 - t) * src_ + t * dst_);
    }

    [[nodiscard]] Point operator()(double t) const { return path(t); }

    [[nodiscard]] Curve curve() const {
        return Curve([g = *this](double t) { return g.path(t); });
    }

  private:
    Point source_;
    Point dest_;
    DualCoordinate dc_;
    Vector src_;
    Vector dst_;
};

[[nodiscard]] inline BregmanGeodesic geodesic(const BregmanManifold& m, const Point& src, const Point& dst,
                                              DualCoordinate dc) {
    return BregmanGeodesic(m, src, dst, dc);
}

} // namespace bregkern
