#pragma once

#include "bregkern/core/generic_linalg.hpp"
#include "bregkern/core/manifold.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace bregkern {

namespace detail {

inline std::optional<std::size_t> spd_violation(const Matrix& a) {
    const Eigen::Index bad = cholesky_failure(a);
    if (bad < 0)
        return std::nullopt;
    return sym_diag_index(static_cast<std::size_t>(a.rows()), static_cast<std::size_t>(bad));
}

/// Jacobian whose k-th column is iso(dmap(E_k)) for the isometric basis E_k.
template <class Fn>
Matrix sym_jacobian(std::size_t n, Fn&& dmap) {
    const auto m = static_cast<Eigen::Index>(sym_size(n));
    Matrix jac(m, m);
    for (Eigen::Index k = 0; k < m; ++k)
        jac.col(k) = flatten_sym(dmap(sym_basis(n, static_cast<std::size_t>(k), SymLayout::isometric)),
                                 SymLayout::isometric);
    return 0.5 * (jac + jac.transpose());
}

} // namespace detail

/// Logdet barrier F(Theta) = -log det Theta on the SPD cone (isometric flat coordinates).
class LogdetBarrier final : public Generator {
  public:
    explicit LogdetBarrier(std::size_t n) : n_(n) {
        if (n == 0)
            throw ArgumentError("matrix size must be positive");
    }

    template <class S>
    S operator()(const std::vector<S>& x) const {
        return -generic::logdet(generic::unflatten(x, 0, n_, SymLayout::isometric));
    }

    [[nodiscard]] std::size_t dimension() const noexcept override { return sym_size(n_); }

    [[nodiscard]] double value(const Vector& x) const override {
        require_domain(x);
        return -spd_logdet(unflatten_sym(x, SymLayout::isometric));
    }

    [[nodiscard]] Vector gradient(const Vector& x) const override {
        require_domain(x);
        return flatten_sym(-spd_inverse(unflatten_sym(x, SymLayout::isometric)), SymLayout::isometric);
    }

    [[nodiscard]] Matrix hessian(const Vector& x) const override {
        require_domain(x);
        const Matrix inv = spd_inverse(unflatten_sym(x, SymLayout::isometric));
        return detail::sym_jacobian(n_, [&](const Matrix& d) -> Matrix { return inv * d * inv; });
    }

    [[nodiscard]] std::optional<std::size_t> domain_violation(const Vector& x) const override {
        return detail::spd_violation(unflatten_sym(x, SymLayout::isometric));
    }

    [[nodiscard]] Vector reference_point() const override {
        return flatten_sym(Matrix::Identity(static_cast<Eigen::Index>(n_), static_cast<Eigen::Index>(n_)),
                           SymLayout::isometric);
    }

  private:
    std::size_t n_;
};

/// Conjugate of the logdet barrier: F*(H) = -log det(-H) - n on the negative definite cone.
class LogdetBarrierConjugate final : public Generator {
  public:
    explicit LogdetBarrierConjugate(std::size_t n) : n_(n) {
        if (n == 0)
            throw ArgumentError("matrix size must be positive");
    }

    template <class S>
    S operator()(const std::vector<S>& x) const {
        auto h = generic::unflatten(x, 0, n_, SymLayout::isometric);
        for (auto& row : h)
            for (auto& v : row)
                v = -v;
        return -generic::logdet(h) - static_cast<double>(n_);
    }

    [[nodiscard]] std::size_t dimension() const noexcept override { return sym_size(n_); }

    [[nodiscard]] double value(const Vector& x) const override {
        require_domain(x);
        return -spd_logdet(-unflatten_sym(x, SymLayout::isometric)) - static_cast<double>(n_);
    }

    [[nodiscard]] Vector gradient(const Vector& x) const override {
        require_domain(x);
        return flatten_sym(spd_inverse(-unflatten_sym(x, SymLayout::isometric)), SymLayout::isometric);
    }

    [[nodiscard]] Matrix hessian(const Vector& x) const override {
        require_domain(x);
        const Matrix inv = spd_inverse(-unflatten_sym(x, SymLayout::isometric));
        return detail::sym_jacobian(n_, [&](const Matrix& d) -> Matrix { return inv * d * inv; });
    }

    [[nodiscard]] std::optional<std::size_t> domain_violation(const Vector& x) const override {
        return detail::spd_violation(-unflatten_sym(x, SymLayout::isometric));
    }

    [[nodiscard]] Vector reference_point() const override {
        return flatten_sym(-Matrix::Identity(static_cast<Eigen::Index>(n_), static_cast<Eigen::Index>(n_)),
                           SymLayout::isometric);
    }

  private:
    std::size_t n_;
};

/// SPD cone with the logdet barrier.
///
/// lambda: plain upper triangle of the matrix; theta: the same matrix in the
/// isometric layout; eta: -Theta^{-1} in the isometric layout.
class PSDManifold : public BregmanManifold {
  public:
    explicit PSDManifold(std::size_t n)
        : BregmanManifold(std::make_shared<LogdetBarrier>(n), std::make_shared<LogdetBarrierConjugate>(n),
                          make_atlas(n), "psd"),
          n_(n) {}

    [[nodiscard]] std::size_t matrix_size() const noexcept { return n_; }

    /// The SPD matrix represented by p.
    [[nodiscard]] Matrix matrix(const Point& p) const { return unflatten_sym(convert(p, lambda_coords).data); }

    [[nodiscard]] Point point(const Matrix& a) const {
        require_spd(a, "matrix");
        return Point(lambda_coords, flatten_sym(a));
    }

  private:
    static Atlas make_atlas(std::size_t n) {
        Atlas a;
        a.register_coords(lambda_coords, sym_size(n));
        a.register_coords(theta_coords, sym_size(n));
        a.register_coords(eta_coords, sym_size(n));
        a.register_conversion(lambda_coords, theta_coords, [](const Vector& v) {
            const Matrix m = unflatten_sym(v);
            require_spd(m, "PSD lambda point");
            return flatten_sym(m, SymLayout::isometric);
        });
        a.register_conversion(theta_coords, lambda_coords, [](const Vector& v) {
            const Matrix m = unflatten_sym(v, SymLayout::isometric);
            require_spd(m, "PSD theta point");
            return flatten_sym(m);
        });
        a.register_conversion(lambda_coords, eta_coords, [](const Vector& v) {
            return flatten_sym(-spd_inverse(unflatten_sym(v)), SymLayout::isometric);
        });
        a.register_conversion(eta_coords, lambda_coords, [](const Vector& v) {
            return flatten_sym(spd_inverse(-unflatten_sym(v, SymLayout::isometric)));
        });
        return a;
    }

    std::size_t n_;
};

} // namespace bregkern
