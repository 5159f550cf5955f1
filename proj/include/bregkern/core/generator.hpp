#pragma once

#include "bregkern/core/autodiff.hpp"
#include "bregkern/core/error.hpp"
#include "bregkern/core/linalg.hpp"

#include <cmath>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>

namespace bregkern {

/// A smooth strictly convex potential with its first two derivatives.
///
/// Implementations must be immutable; manifolds share them across threads.
class Generator {
  public:
    virtual ~Generator() = default;

    [[nodiscard]] virtual std::size_t dimension() const noexcept = 0;
    [[nodiscard]] virtual double value(const Vector& x) const = 0;
    [[nodiscard]] virtual Vector gradient(const Vector& x) const = 0;
    [[nodiscard]] virtual Matrix hessian(const Vector& x) const = 0;

    /// First coordinate responsible for x leaving the domain, nullopt if x is inside.
    [[nodiscard]] virtual std::optional<std::size_t> domain_violation(const Vector& x) const = 0;

    /// Some point inside the domain; used to start Newton inversion of the gradient.
    [[nodiscard]] virtual Vector reference_point() const { return Vector::Zero(static_cast<Eigen::Index>(dimension())); }

    [[nodiscard]] bool in_domain(const Vector& x) const {
        return x.size() == static_cast<Eigen::Index>(dimension()) && x.allFinite() && !domain_violation(x);
    }

    void require_domain(const Vector& x) const {
        if (x.size() != static_cast<Eigen::Index>(dimension()))
            throw DomainError("expected " + std::to_string(dimension()) + " coordinates, got " + std::to_string(x.size()));
        if (!x.allFinite())
            throw DomainError("non-finite coordinates");
        if (auto bad = domain_violation(x))
            throw DomainError("point outside generator domain", bad);
    }
};

using GeneratorPtr = std::shared_ptr<const Generator>;

struct NewtonOptions {
    std::size_t max_iterations = 100;
    double tolerance = 1e-12;
    std::size_t max_halvings = 60;
};

/// Solve grad F(theta) = eta by damped Newton iteration.
///
/// Steps are halved while the candidate leaves the domain and, after that,
/// while the residual norm does not decrease.
[[nodiscard]] inline Vector invert_gradient(const Generator& f, const Vector& eta, const NewtonOptions& opt = {}) {
    if (eta.size() != static_cast<Eigen::Index>(f.dimension()))
        throw DomainError("gradient inversion: expected " + std::to_string(f.dimension()) + " coordinates");
    if (!eta.allFinite())
        throw DomainError("gradient inversion: non-finite target");
    Vector theta = f.reference_point();
    const double scale = std::max(1.0, eta.lpNorm<Eigen::Infinity>());
    Vector r = f.gradient(theta) - eta;
    for (std::size_t it = 0; it < opt.max_iterations; ++it) {
        if (r.lpNorm<Eigen::Infinity>() <= opt.tolerance * scale)
            return theta;
        const Matrix h = f.hessian(theta);
        const Vector step = h.ldlt().solve(r);
        if (!step.allFinite())
            break;
        if (step.lpNorm<Eigen::Infinity>() <= 1e-15 * (1.0 + theta.lpNorm<Eigen::Infinity>()) &&
            r.lpNorm<Eigen::Infinity>() <= 1e-9 * scale)
            return theta; // stalled at roundoff
        double lambda = 1.0;
        Vector cand = theta - step;
        std::size_t halvings = 0;
        while (!f.in_domain(cand) && halvings < opt.max_halvings) {
            lambda *= 0.5;
            cand = theta - lambda * step;
            ++halvings;
        }
        if (!f.in_domain(cand))
            break;
        Vector rc = f.gradient(cand) - eta;
        const double r0 = r.norm();
        Vector best = cand;
        Vector best_r = rc;
        while (rc.norm() >= r0 && halvings < opt.max_halvings) {
            lambda *= 0.5;
            cand = theta - lambda * step;
            rc = f.gradient(cand) - eta;
            ++halvings;
            if (rc.norm() < best_r.norm()) {
                best = cand;
                best_r = rc;
            }
        }
        theta = best;
        r = best_r;
    }
    if (r.lpNorm<Eigen::Infinity>() <= opt.tolerance * scale)
        return theta;
    throw ConvergenceError("Newton inversion of the gradient map", opt.max_iterations);
}

/// Generator whose derivatives come from forward-mode AD of a generic scalar field.
///
/// `Fn` takes `const std::vector<S>&` for S in {double, Dual<double>,
/// Dual<Dual<double>>}; `Domain` maps a Vector to an optional offending index.
template <class Fn, class Domain>
class AutoDiffGenerator final : public Generator {
  public:
    AutoDiffGenerator(std::size_t dim, Fn fn, Domain domain, std::optional<Vector> reference = std::nullopt)
        : dim_(dim), fn_(std::move(fn)), domain_(std::move(domain)), reference_(std::move(reference)) {
        if (dim_ == 0)
            throw ArgumentError("generator dimension must be positive");
    }

    [[nodiscard]] std::size_t dimension() const noexcept override { return dim_; }

    [[nodiscard]] double value(const Vector& x) const override {
        require_domain(x);
        return ad::evaluate(fn_, x);
    }

    [[nodiscard]] Vector gradient(const Vector& x) const override {
        require_domain(x);
        return ad::gradient(fn_, x);
    }

    [[nodiscard]] Matrix hessian(const Vector& x) const override {
        require_domain(x);
        return ad::hessian(fn_, x);
    }

    [[nodiscard]] std::optional<std::size_t> domain_violation(const Vector& x) const override { return domain_(x); }

    [[nodiscard]] Vector reference_point() const override {
        return reference_ ? *reference_ : Generator::reference_point();
    }

  private:
    std::size_t dim_;
    Fn fn_;
    Domain domain_;
    std::optional<Vector> reference_;
};

/// Build a shared AD generator; `domain` defaults to the whole space.
template <class Fn>
[[nodiscard]] GeneratorPtr make_autodiff_generator(std::size_t dim, Fn fn) {
    auto everywhere = [](const Vector&) -> std::optional<std::size_t> { return std::nullopt; };
    return std::make_shared<AutoDiffGenerator<Fn, decltype(everywhere)>>(dim, std::move(fn), everywhere);
}

template <class Fn, class Domain>
[[nodiscard]] GeneratorPtr make_autodiff_generator(std::size_t dim, Fn fn, Domain domain,
                                                   std::optional<Vector> reference = std::nullopt) {
    return std::make_shared<AutoDiffGenerator<Fn, Domain>>(dim, std::move(fn), std::move(domain), std::move(reference));
}

/// Convex conjugate F* obtained numerically from F through the Legendre transform.
///
/// Used when a manifold has no closed-form dual generator.
class LegendreDualGenerator final : public Generator {
  public:
    explicit LegendreDualGenerator(GeneratorPtr primal, NewtonOptions opt = {})
        : primal_(std::move(primal)), opt_(opt) {}

    [[nodiscard]] std::size_t dimension() const noexcept override { return primal_->dimension(); }

    [[nodiscard]] double value(const Vector& eta) const override {
        const Vector theta = invert_gradient(*primal_, eta, opt_);
        return theta.dot(eta) - primal_->value(theta);
    }

    [[nodiscard]] Vector gradient(const Vector& eta) const override { return invert_gradient(*primal_, eta, opt_); }

    [[nodiscard]] Matrix hessian(const Vector& eta) const override {
        const Matrix h = primal_->hessian(invert_gradient(*primal_, eta, opt_));
        Matrix inv = h.ldlt().solve(Matrix::Identity(h.rows(), h.cols()));
        return 0.5 * (inv + inv.transpose());
    }

    [[nodiscard]] std::optional<std::size_t> domain_violation(const Vector&) const override { return std::nullopt; }

    [[nodiscard]] Vector reference_point() const override { return primal_->gradient(primal_->reference_point()); }

  private:
    GeneratorPtr primal_;
    NewtonOptions opt_;
};

} // namespace bregkern
