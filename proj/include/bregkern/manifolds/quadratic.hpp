#pragma once

#include "bregkern/core/manifold.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace bregkern {

/// F(x) = 1/2 |x|^2 on R^n. Self-conjugate, so theta and eta coincide.
class QuadraticGenerator final : public Generator {
  public:
    explicit QuadraticGenerator(std::size_t n) : n_(n) {
        if (n == 0)
            throw ArgumentError("dimension must be positive");
    }

    template <class S>
    S operator()(const std::vector<S>& x) const {
        S out(0.0);
        for (const auto& v : x)
            out = out + 0.5 * v * v;
        return out;
    }

    [[nodiscard]] std::size_t dimension() const noexcept override { return n_; }
    [[nodiscard]] double value(const Vector& x) const override {
        require_domain(x);
        return 0.5 * x.squaredNorm();
    }
    [[nodiscard]] Vector gradient(const Vector& x) const override {
        require_domain(x);
        return x;
    }
    [[nodiscard]] Matrix hessian(const Vector& x) const override {
        require_domain(x);
        return Matrix::Identity(x.size(), x.size());
    }
    [[nodiscard]] std::optional<std::size_t> domain_violation(const Vector&) const override { return std::nullopt; }

  private:
    std::size_t n_;
};

[[nodiscard]] inline BregmanManifold make_quadratic_manifold(std::size_t n) {
    auto g = std::make_shared<QuadraticGenerator>(n);
    return BregmanManifold(g, g, {}, "quadratic");
}

} // namespace bregkern
