#pragma once

#include "bregkern/core/manifold.hpp"

namespace bregkern {

/// Hyperplane <x, normal> = offset in the dcoords chart.
///
/// Primal: x in theta with B_F(x : p) = B_F(x : q).
/// Dual:   x in eta with B_F(p : x) = B_F(q : x).
class BregmanBisector {
  public:
    BregmanBisector(const BregmanManifold& m, const Point& p, const Point& q, DualCoordinate dc)
        : p_(p), q_(q), dc_(dc) {
        const DualCoordinate other = opposite(dc);
        const Generator& g = m.generator(other);
        const Vector yp = m.coords(p, other);
        const Vector yq = m.coords(q, other);
        normal_ = yq - yp;
        if (normal_.cwiseAbs().maxCoeff() == 0.0)
            throw DegenerateBisectorError();
        offset_ = g.value(yq) - g.value(yp);
    }

    [[nodiscard]] DualCoordinate dcoords() const noexcept { return dc_; }
    [[nodiscard]] const Point& p() const noexcept { return p_; }
    [[nodiscard]] const Point& q() const noexcept { return q_; }
    [[nodiscard]] const Vector& normal() const noexcept { return normal_; }
    [[nodiscard]] double offset() const noexcept { return offset_; }

    /// <x, normal> - offset for x given in the bisector's chart.
    [[nodiscard]] double residual(const Vector& x) const {
        if (x.size() != normal_.size())
            throw DomainError("point length does not match bisector dimension");
        return x.dot(normal_) - offset_;
    }

    [[nodiscard]] double residual(const BregmanManifold& m, const Point& x) const {
        return residual(m.convert(x, to_tag(dc_)).data);
    }

  private:
    Point p_;
    Point q_;
    DualCoordinate dc_;
    Vector normal_;
    double offset_ = 0.0;
};

[[nodiscard]] inline BregmanBisector bisector(const BregmanManifold& m, const Point& p, const Point& q,
                                              DualCoordinate dc) {
    return BregmanBisector(m, p, q, dc);
}

} // namespace bregkern
