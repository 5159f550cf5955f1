#pragma once

#include "bregkern/core/generic_linalg.hpp"
#include "bregkern/core/manifold.hpp"
#include "bregkern/manifolds/psd.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

namespace bregkern {

// Parameterization of N(mu, Sigma) in R^d, flat length d + d(d+1)/2:
//   lambda = (mu, Sigma)                    plain upper triangle
//   theta  = (Sigma^{-1} mu, -1/2 Sigma^{-1})  isometric upper triangle
//   eta    = (mu, Sigma + mu mu^T)             isometric upper triangle
// so that eta = grad F(theta) for the log-normalizer F.

namespace detail {

[[nodiscard]] inline std::size_t gaussian_order(std::size_t flat) {
    for (std::size_t d = 1; d + sym_size(d) <= flat; ++d)
        if (d + sym_size(d) == flat)
            return d;
    throw ArgumentError("length " + std::to_string(flat) + " is not d + d(d+1)/2");
}

struct MeanCov {
    Vector mean;
    Matrix cov;
};

inline MeanCov split_lambda(const Vector& v, std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    return {v.head(n), unflatten_sym(v.tail(v.size() - n))};
}

inline Vector join(const Vector& head, const Matrix& m, SymLayout layout) {
    const Vector tail = flatten_sym(m, layout);
    Vector out(head.size() + tail.size());
    out << head, tail;
    return out;
}

} // namespace detail

/// Log-normalizer of the d-variate normal family in natural parameters.
///
/// With P = -2 Theta_2 (the precision), F = 1/2 theta_1^T P^{-1} theta_1 - 1/2 log det P + d/2 log(2 pi).
class GaussianCumulant final : public Generator {
  public:
    explicit GaussianCumulant(std::size_t d) : d_(d) {
        if (d == 0)
            throw ArgumentError("sample dimension must be positive");
    }

    template <class S>
    S operator()(const std::vector<S>& x) const {
        auto p = generic::unflatten(x, d_, d_, SymLayout::isometric);
        for (auto& row : p)
            for (auto& v : row)
                v = -2.0 * v;
        std::vector<S> t1(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(d_));
        return 0.5 * generic::inverse_quadratic_form(p, t1) - 0.5 * generic::logdet(p) + log_2pi_term();
    }

    [[nodiscard]] std::size_t dimension() const noexcept override { return d_ + sym_size(d_); }

    [[nodiscard]] double value(const Vector& x) const override {
        require_domain(x);
        const auto [t1, prec] = split(x);
        const Eigen::LLT<Matrix> llt(prec);
        return 0.5 * t1.dot(llt.solve(t1)) - 0.5 * spd_logdet(prec) + log_2pi_term();
    }

    [[nodiscard]] Vector gradient(const Vector& x) const override {
        require_domain(x);
        const auto [t1, prec] = split(x);
        const Matrix cov = spd_inverse(prec);
        const Vector mu = cov * t1;
        return detail::join(mu, cov + mu * mu.transpose(), SymLayout::isometric);
    }

    [[nodiscard]] Matrix hessian(const Vector& x) const override {
        require_domain(x);
        const auto [t1, prec] = split(x);
        const Matrix cov = spd_inverse(prec);
        const Vector mu = cov * t1;
        const auto n = static_cast<Eigen::Index>(dimension());
        const auto d = static_cast<Eigen::Index>(d_);
        Matrix h(n, n);
        // directional derivative of (mu, Sigma + mu mu^T) along (dt1, dTheta2)
        auto column = [&](const Vector& dt1, const Matrix& dth2) {
            const Matrix dcov = 2.0 * cov * dth2 * cov;
            const Vector dmu = dcov * t1 + cov * dt1;
            return detail::join(dmu, dcov + dmu * mu.transpose() + mu * dmu.transpose(), SymLayout::isometric);
        };
        for (Eigen::Index k = 0; k < n; ++k) {
            Vector dt1 = Vector::Zero(d);
            Matrix dth2 = Matrix::Zero(d, d);
            if (k < d)
                dt1[k] = 1.0;
            else
                dth2 = sym_basis(d_, static_cast<std::size_t>(k - d), SymLayout::isometric);
            h.col(k) = column(dt1, dth2);
        }
        return 0.5 * (h + h.transpose());
    }

    [[nodiscard]] std::optional<std::size_t> domain_violation(const Vector& x) const override {
        const auto bad = detail::spd_violation(precision(x));
        if (bad)
            return d_ + *bad;
        return std::nullopt;
    }

    [[nodiscard]] Vector reference_point() const override {
        const auto d = static_cast<Eigen::Index>(d_);
        return detail::join(Vector::Zero(d), -0.5 * Matrix::Identity(d, d), SymLayout::isometric);
    }

  private:
    [[nodiscard]] double log_2pi_term() const { return 0.5 * static_cast<double>(d_) * std::log(2.0 * std::numbers::pi); }

    [[nodiscard]] Matrix precision(const Vector& x) const {
        const auto d = static_cast<Eigen::Index>(d_);
        return -2.0 * unflatten_sym(x.tail(x.size() - d), SymLayout::isometric);
    }

    [[nodiscard]] std::pair<Vector, Matrix> split(const Vector& x) const {
        return {x.head(static_cast<Eigen::Index>(d_)), precision(x)};
    }

    std::size_t d_;
};

/// Conjugate of GaussianCumulant: the negative differential entropy
/// F*(eta) = -1/2 log det(2 pi e Sigma), Sigma = eta_2 - eta_1 eta_1^T.
class GaussianNegentropy final : public Generator {
  public:
    explicit GaussianNegentropy(std::size_t d) : d_(d) {
        if (d == 0)
            throw ArgumentError("sample dimension must be positive");
    }

    template <class S>
    S operator()(const std::vector<S>& x) const {
        auto cov = generic::unflatten(x, d_, d_, SymLayout::isometric);
        for (std::size_t i = 0; i < d_; ++i)
            for (std::size_t j = 0; j < d_; ++j)
                cov[i][j] = cov[i][j] - x[i] * x[j];
        return -0.5 * generic::logdet(cov) - entropy_constant();
    }

    [[nodiscard]] std::size_t dimension() const noexcept override { return d_ + sym_size(d_); }

    [[nodiscard]] double value(const Vector& x) const override {
        require_domain(x);
        return -0.5 * spd_logdet(covariance(x)) - entropy_constant();
    }

    [[nodiscard]] Vector gradient(const Vector& x) const override {
        require_domain(x);
        const Vector mu = x.head(static_cast<Eigen::Index>(d_));
        const Matrix prec = spd_inverse(covariance(x));
        return detail::join(prec * mu, -0.5 * prec, SymLayout::isometric);
    }

    [[nodiscard]] Matrix hessian(const Vector& x) const override {
        require_domain(x);
        const Vector mu = x.head(static_cast<Eigen::Index>(d_));
        const Matrix prec = spd_inverse(covariance(x));
        const auto n = static_cast<Eigen::Index>(dimension());
        const auto d = static_cast<Eigen::Index>(d_);
        Matrix h(n, n);
        // directional derivative of (P mu, -1/2 P), P = (H - mu mu^T)^{-1}
        auto column = [&](const Vector& dmu, const Matrix& dh) {
            const Matrix dcov = dh - dmu * mu.transpose() - mu * dmu.transpose();
            const Matrix dprec = -prec * dcov * prec;
            return detail::join(dprec * mu + prec * dmu, -0.5 * dprec, SymLayout::isometric);
        };
        for (Eigen::Index k = 0; k < n; ++k) {
            Vector dmu = Vector::Zero(d);
            Matrix dh = Matrix::Zero(d, d);
            if (k < d)
                dmu[k] = 1.0;
            else
                dh = sym_basis(d_, static_cast<std::size_t>(k - d), SymLayout::isometric);
            h.col(k) = column(dmu, dh);
        }
        return 0.5 * (h + h.transpose());
    }

    [[nodiscard]] std::optional<std::size_t> domain_violation(const Vector& x) const override {
        const auto bad = detail::spd_violation(covariance(x));
        if (bad)
            return d_ + *bad;
        return std::nullopt;
    }

    [[nodiscard]] Vector reference_point() const override {
        const auto d = static_cast<Eigen::Index>(d_);
        return detail::join(Vector::Zero(d), Matrix::Identity(d, d), SymLayout::isometric);
    }

  private:
    [[nodiscard]] double entropy_constant() const {
        return 0.5 * static_cast<double>(d_) * (1.0 + std::log(2.0 * std::numbers::pi));
    }

    [[nodiscard]] Matrix covariance(const Vector& x) const {
        const auto d = static_cast<Eigen::Index>(d_);
        const Vector mu = x.head(d);
        return unflatten_sym(x.tail(x.size() - d), SymLayout::isometric) - mu * mu.transpose();
    }

    std::size_t d_;
};

/// Multivariate normal distributions N(mu, Sigma) on R^d.
class GaussianManifold : public BregmanManifold {
  public:
    explicit GaussianManifold(std::size_t d)
        : BregmanManifold(std::make_shared<GaussianCumulant>(d), std::make_shared<GaussianNegentropy>(d), make_atlas(d),
                          "gaussian"),
          d_(d) {}

    [[nodiscard]] std::size_t sample_dimension() const noexcept { return d_; }

    [[nodiscard]] Point point(const Vector& mean, const Matrix& cov) const {
        if (mean.size() != static_cast<Eigen::Index>(d_) || cov.rows() != mean.size())
            throw DomainError("mean/covariance shape does not match d = " + std::to_string(d_));
        require_spd(cov, "covariance");
        return Point(lambda_coords, detail::join(mean, cov, SymLayout::plain));
    }

    [[nodiscard]] Vector mean(const Point& p) const {
        return convert(p, lambda_coords).data.head(static_cast<Eigen::Index>(d_));
    }

    [[nodiscard]] Matrix covariance(const Point& p) const {
        const Vector l = convert(p, lambda_coords).data;
        return unflatten_sym(l.tail(l.size() - static_cast<Eigen::Index>(d_)));
    }

  private:
    static Atlas make_atlas(std::size_t d) {
        const std::size_t n = d + sym_size(d);
        Atlas a;
        a.register_coords(lambda_coords, n);
        a.register_coords(theta_coords, n);
        a.register_coords(eta_coords, n);
        a.register_conversion(lambda_coords, theta_coords, [d](const Vector& v) {
            const auto [mu, cov] = detail::split_lambda(v, d);
            const Matrix prec = spd_inverse(cov);
            return detail::join(prec * mu, -0.5 * prec, SymLayout::isometric);
        });
        a.register_conversion(theta_coords, lambda_coords, [d](const Vector& v) {
            const auto nd = static_cast<Eigen::Index>(d);
            const Matrix cov = spd_inverse(-2.0 * unflatten_sym(v.tail(v.size() - nd), SymLayout::isometric));
            return detail::join(cov * v.head(nd), cov, SymLayout::plain);
        });
        a.register_conversion(lambda_coords, eta_coords, [d](const Vector& v) {
            const auto [mu, cov] = detail::split_lambda(v, d);
            require_spd(cov, "covariance");
            return detail::join(mu, cov + mu * mu.transpose(), SymLayout::isometric);
        });
        a.register_conversion(eta_coords, lambda_coords, [d](const Vector& v) {
            const auto nd = static_cast<Eigen::Index>(d);
            const Vector mu = v.head(nd);
            const Matrix cov = unflatten_sym(v.tail(v.size() - nd), SymLayout::isometric) - mu * mu.transpose();
            require_spd(cov, "covariance");
            return detail::join(mu, cov, SymLayout::plain);
        });
        return a;
    }

    std::size_t d_;
};

/// KL(p : q) between two normals, closed form.
[[nodiscard]] inline double gaussian_kl(const GaussianManifold& g, const Point& p, const Point& q) {
    const Vector mp = g.mean(p);
    const Vector mq = g.mean(q);
    const Matrix sp = g.covariance(p);
    const Matrix sq = g.covariance(q);
    require_spd(sp, "covariance");
    require_spd(sq, "covariance");
    const Eigen::LLT<Matrix> llt(sq);
    const Vector dm = mq - mp;
    const double trace = llt.solve(sp).trace();
    const double quad = dm.dot(llt.solve(dm));
    const auto d = static_cast<double>(g.sample_dimension());
    return 0.5 * (trace + quad - d + spd_logdet(sq) - spd_logdet(sp));
}

} // namespace bregkern
