#pragma once

#include "bregkern/core/manifold.hpp"

#include <cmath>
#include <memory>
#include <optional>
#include <vector>

namespace bregkern {

/// Extended negative Shannon entropy F(x) = sum x_i log x_i - x_i on the open positive orthant.
class ExtendedNegentropyGenerator final : public Generator {
  public:
    explicit ExtendedNegentropyGenerator(std::size_t n = 2) : n_(n) {}

    template <class S>
    S operator()(const std::vector<S>& x) const {
        using std::log;
        S out(0.0);
        for (const auto& v : x)
            out = out + v * log(v) - v;
        return out;
    }

    [[nodiscard]] std::size_t dimension() const noexcept override { return n_; }
    [[nodiscard]] double value(const Vector& x) const override {
        require_domain(x);
        return (x.array() * x.array().log() - x.array()).sum();
    }
    [[nodiscard]] Vector gradient(const Vector& x) const override {
        require_domain(x);
        return x.array().log().matrix();
    }
    [[nodiscard]] Matrix hessian(const Vector& x) const override {
        require_domain(x);
        return x.cwiseInverse().asDiagonal();
    }
    [[nodiscard]] std::optional<std::size_t> domain_violation(const Vector& x) const override {
        for (Eigen::Index i = 0; i < x.size(); ++i)
            if (!(x[i] > 0.0))
                return static_cast<std::size_t>(i);
        return std::nullopt;
    }
    [[nodiscard]] Vector reference_point() const override { return Vector::Ones(static_cast<Eigen::Index>(n_)); }

  private:
    std::size_t n_;
};

/// F*(y) = sum exp(y_i), the conjugate of the extended negentropy.
class ExponentialSumGenerator final : public Generator {
  public:
    explicit ExponentialSumGenerator(std::size_t n = 2) : n_(n) {}

    template <class S>
    S operator()(const std::vector<S>& x) const {
        using std::exp;
        S out(0.0);
        for (const auto& v : x)
            out = out + exp(v);
        return out;
    }

    [[nodiscard]] std::size_t dimension() const noexcept override { return n_; }
    [[nodiscard]] double value(const Vector& x) const override {
        require_domain(x);
        return x.array().exp().sum();
    }
    [[nodiscard]] Vector gradient(const Vector& x) const override {
        require_domain(x);
        return x.array().exp().matrix();
    }
    [[nodiscard]] Matrix hessian(const Vector& x) const override {
        require_domain(x);
        return x.array().exp().matrix().asDiagonal();
    }
    [[nodiscard]] std::optional<std::size_t> domain_violation(const Vector&) const override { return std::nullopt; }

  private:
    std::size_t n_;
};

/// Two-dimensional extended-KL manifold; lambda coordinates are theta coordinates.
class EKL2DManifold : public BregmanManifold {
  public:
    EKL2DManifold() : BregmanManifold(std::make_shared<ExtendedNegentropyGenerator>(2),
                                      std::make_shared<ExponentialSumGenerator>(2), make_atlas(), "ekl2d") {}

  private:
    static Atlas make_atlas() {
        Atlas a;
        a.register_coords(lambda_coords, 2);
        a.register_coords(theta_coords, 2);
        a.register_coords(eta_coords, 2);
        a.register_conversion(lambda_coords, theta_coords, [](const Vector& v) { return v; });
        a.register_conversion(theta_coords, lambda_coords, [](const Vector& v) { return v; });
        return a;
    }
};

} // namespace bregkern
