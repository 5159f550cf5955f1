#pragma once

#include "bregkern/core/atlas.hpp"
#include "bregkern/core/coords.hpp"
#include "bregkern/core/error.hpp"
#include "bregkern/core/generator.hpp"
#include "bregkern/core/linalg.hpp"

#include <memory>
#include <string>
#include <utility>

namespace bregkern {

/// A dually flat space: primal potential F, optional closed-form conjugate F*,
/// and an atlas in which theta <-> eta are the gradient maps.
///
/// Immutable once built; copies share generators and atlas.
class BregmanManifold {
  public:
    BregmanManifold(GeneratorPtr theta_generator, GeneratorPtr eta_generator = nullptr, Atlas atlas = {},
                    std::string name = "bregman")
        : theta_(std::move(theta_generator)), eta_(std::move(eta_generator)), name_(std::move(name)) {
        if (!theta_)
            throw ArgumentError("a Bregman manifold needs a primal generator");
        if (eta_ && eta_->dimension() != theta_->dimension())
            throw ArgumentError("primal and dual generators disagree on dimension");
        dual_ = eta_ ? eta_ : std::make_shared<LegendreDualGenerator>(theta_);

        const std::size_t dim = theta_->dimension();
        atlas.register_coords(theta_coords, dim);
        atlas.register_coords(eta_coords, dim);
        atlas.register_conversion(theta_coords, eta_coords, [f = theta_](const Vector& v) { return f->gradient(v); });
        atlas.register_conversion(eta_coords, theta_coords, [g = dual_](const Vector& v) { return g->gradient(v); });
        atlas_ = std::make_shared<const Atlas>(std::move(atlas));
    }

    [[nodiscard]] std::size_t dimension() const noexcept { return theta_->dimension(); }
    [[nodiscard]] const std::string& name() const noexcept { return name_; }

    [[nodiscard]] const Generator& theta_generator() const noexcept { return *theta_; }
    /// Closed-form F*, or nullptr when the manifold was built without one.
    [[nodiscard]] const GeneratorPtr& eta_generator() const noexcept { return eta_; }
    [[nodiscard]] bool has_eta_generator() const noexcept { return static_cast<bool>(eta_); }

    /// F for primal, F* (closed form or numerical Legendre transform) for dual.
    [[nodiscard]] const Generator& generator(DualCoordinate dc) const noexcept {
        return dc == DualCoordinate::primal ? *theta_ : *dual_;
    }

    [[nodiscard]] const Atlas& atlas() const noexcept { return *atlas_; }

    [[nodiscard]] Point convert(const Point& p, const CoordinateTag& target) const {
        if (p.coords == target) {
            (void)atlas_->dimension(target);
            check_size(p);
            return p;
        }
        return Point(target, atlas_->convert(p.coords, target, p.data));
    }

    /// Coordinates of p in a flat system, validated against that generator's domain.
    [[nodiscard]] Vector coords(const Point& p, DualCoordinate dc) const {
        Vector v = convert(p, to_tag(dc)).data;
        generator(dc).require_domain(v);
        return v;
    }

    [[nodiscard]] Vector theta_to_eta(const Vector& theta) const { return theta_->gradient(theta); }
    [[nodiscard]] Vector eta_to_theta(const Vector& eta) const { return dual_->gradient(eta); }

  private:
    void check_size(const Point& p) const {
        const auto n = atlas_->dimension(p.coords);
        if (p.data.size() != static_cast<Eigen::Index>(n))
            throw DomainError("'" + p.coords.name() + "' coordinates need " + std::to_string(n) + " values, got " +
                              std::to_string(p.data.size()));
    }

    GeneratorPtr theta_;
    GeneratorPtr eta_;
    GeneratorPtr dual_;
    std::shared_ptr<const Atlas> atlas_;
    std::string name_;
};

/// eta = grad F(theta), tagged "eta".
[[nodiscard]] inline Point legendre_dual_coord(const BregmanManifold& m, const Point& p) {
    const Vector theta = m.coords(p, DualCoordinate::primal);
    return Point(eta_coords, m.theta_to_eta(theta));
}

/// F*(eta) through the Legendre transform <grad F^{-1}(eta), eta> - F(grad F^{-1}(eta)).
[[nodiscard]] inline double conjugate_value(const BregmanManifold& m, const Vector& eta) {
    const Vector theta = m.eta_to_theta(eta);
    return theta.dot(eta) - m.theta_generator().value(theta);
}

[[nodiscard]] inline Point atlas_convert(const BregmanManifold& m, const Point& p, const CoordinateTag& target) {
    return m.convert(p, target);
}

/// Hessian metric: grad^2 F(theta) for primal, grad^2 F*(eta) for dual.
[[nodiscard]] inline Matrix metric_tensor(const BregmanManifold& m, const Point& p, DualCoordinate dc) {
    return m.generator(dc).hessian(m.coords(p, dc));
}

} // namespace bregkern
