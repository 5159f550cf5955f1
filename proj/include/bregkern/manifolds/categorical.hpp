#pragma once

#include "bregkern/core/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bregkern {

/// Cumulant of the multinomial family with `trials` draws over k = dim + 1
/// outcomes: F(theta) = trials * log(1 + sum_i exp(theta_i)).
class MultinomialCumulant final : public Generator {
  public:
    MultinomialCumulant(std::size_t dim, double trials) : dim_(dim), trials_(trials) {
        if (dim == 0)
            throw ArgumentError("need at least two categories");
        if (!(trials > 0.0))
            throw ArgumentError("number of trials must be positive");
    }

    template <class S>
    S operator()(const std::vector<S>& x) const {
        using std::exp;
        using std::log;
        S sum(1.0);
        for (const auto& v : x)
            sum = sum + exp(v);
        return trials_ * log(sum);
    }

    [[nodiscard]] std::size_t dimension() const noexcept override { return dim_; }

    [[nodiscard]] double value(const Vector& x) const override {
        require_domain(x);
        const double m = std::max(0.0, x.maxCoeff());
        return trials_ * (m + std::log(std::exp(-m) + (x.array() - m).exp().sum()));
    }

    [[nodiscard]] Vector gradient(const Vector& x) const override {
        require_domain(x);
        return trials_ * softmax(x);
    }

    [[nodiscard]] Matrix hessian(const Vector& x) const override {
        require_domain(x);
        const Vector p = softmax(x);
        Matrix h = -p * p.transpose();
        h.diagonal() += p;
        return trials_ * h;
    }

    [[nodiscard]] std::optional<std::size_t> domain_violation(const Vector&) const override { return std::nullopt; }

    /// Probabilities of the first k-1 outcomes.
    [[nodiscard]] static Vector softmax(const Vector& x) {
        const double m = std::max(0.0, x.maxCoeff());
        Vector e = (x.array() - m).exp().matrix();
        const double z = std::exp(-m) + e.sum();
        return e / z;
    }

  private:
    std::size_t dim_;
    double trials_;
};

/// Conjugate of MultinomialCumulant: trials * negentropy(eta / trials), where
/// the last probability is 1 - sum(eta) / trials.
class MultinomialNegentropy final : public Generator {
  public:
    MultinomialNegentropy(std::size_t dim, double trials) : dim_(dim), trials_(trials) {
        if (dim == 0)
            throw ArgumentError("need at least two categories");
        if (!(trials > 0.0))
            throw ArgumentError("number of trials must be positive");
    }

    template <class S>
    S operator()(const std::vector<S>& x) const {
        using std::log;
        S rest(1.0);
        S out(0.0);
        for (const auto& v : x) {
            S p = v / trials_;
            out = out + p * log(p);
            rest = rest - p;
        }
        out = out + rest * log(rest);
        return trials_ * out;
    }

    [[nodiscard]] std::size_t dimension() const noexcept override { return dim_; }

    [[nodiscard]] double value(const Vector& x) const override {
        require_domain(x);
        const Vector p = x / trials_;
        const double rest = 1.0 - p.sum();
        return trials_ * ((p.array() * p.array().log()).sum() + rest * std::log(rest));
    }

    [[nodiscard]] Vector gradient(const Vector& x) const override {
        require_domain(x);
        const Vector p = x / trials_;
        const double rest = 1.0 - p.sum();
        return (p.array().log() - std::log(rest)).matrix();
    }

    [[nodiscard]] Matrix hessian(const Vector& x) const override {
        require_domain(x);
        const Vector p = x / trials_;
        const double rest = 1.0 - p.sum();
        Matrix h = Matrix::Constant(x.size(), x.size(), 1.0 / rest);
        h.diagonal() += p.cwiseInverse();
        return h / trials_;
    }

    [[nodiscard]] std::optional<std::size_t> domain_violation(const Vector& x) const override {
        double sum = 0.0;
        for (Eigen::Index i = 0; i < x.size(); ++i) {
            if (!(x[i] > 0.0))
                return static_cast<std::size_t>(i);
            sum += x[i] / trials_;
            if (!(sum < 1.0))
                return static_cast<std::size_t>(i);
        }
        return std::nullopt;
    }

    [[nodiscard]] Vector reference_point() const override {
        return Vector::Constant(static_cast<Eigen::Index>(dim_), trials_ / static_cast<double>(dim_ + 1));
    }

  private:
    std::size_t dim_;
    double trials_;
};

namespace detail {

inline constexpr double simplex_tolerance = 1e-9;

inline void require_simplex(const Vector& p) {
    for (Eigen::Index i = 0; i < p.size(); ++i)
        if (!(p[i] > 0.0))
            throw DomainError("probability vector must be strictly positive", static_cast<std::size_t>(i));
    if (std::abs(p.sum() - 1.0) > simplex_tolerance)
        throw DomainError("probability vector must sum to 1 (sum = " + std::to_string(p.sum()) + ")");
}

/// log(p_i / p_k) for i < k.
inline Vector simplex_to_log_ratio(const Vector& p) {
    require_simplex(p);
    const Eigen::Index k = p.size();
    return (p.head(k - 1).array().log() - std::log(p[k - 1])).matrix();
}

inline Vector log_ratio_to_simplex(const Vector& theta) {
    const double m = std::max(0.0, theta.maxCoeff());
    Vector p(theta.size() + 1);
    p.head(theta.size()) = (theta.array() - m).exp().matrix();
    p[theta.size()] = std::exp(-m);
    return p / p.sum();
}

inline Vector head_to_simplex(const Vector& head) {
    Vector p(head.size() + 1);
    p.head(head.size()) = head;
    p[head.size()] = 1.0 - head.sum();
    require_simplex(p);
    return p;
}

inline Atlas multinomial_atlas(std::size_t k, double trials) {
    Atlas a;
    a.register_coords(lambda_coords, k);
    a.register_coords(theta_coords, k - 1);
    a.register_coords(eta_coords, k - 1);
    a.register_conversion(lambda_coords, theta_coords, [](const Vector& p) { return simplex_to_log_ratio(p); });
    a.register_conversion(theta_coords, lambda_coords, [](const Vector& t) { return log_ratio_to_simplex(t); });
    a.register_conversion(lambda_coords, eta_coords, [trials](const Vector& p) {
        require_simplex(p);
        return Vector(trials * p.head(p.size() - 1));
    });
    a.register_conversion(eta_coords, lambda_coords,
                          [trials](const Vector& e) { return head_to_simplex(e / trials); });
    return a;
}

inline std::size_t checked_categories(std::size_t k) {
    if (k < 2)
        throw ArgumentError("need at least two categories, got " + std::to_string(k));
    return k;
}

} // namespace detail

/// Multinomial distributions with a fixed number of trials over k outcomes.
///
/// lambda: probabilities (k values); theta: log(p_i / p_k); eta: trials * p_i (i < k).
class MultinomialManifold : public BregmanManifold {
  public:
    MultinomialManifold(std::size_t k, double trials)
        : BregmanManifold(std::make_shared<MultinomialCumulant>(detail::checked_categories(k) - 1, trials),
                          std::make_shared<MultinomialNegentropy>(k - 1, trials), detail::multinomial_atlas(k, trials),
                          "multinomial"),
          k_(k), trials_(trials) {}

    [[nodiscard]] std::size_t categories() const noexcept { return k_; }
    [[nodiscard]] double trials() const noexcept { return trials_; }

  protected:
    MultinomialManifold(std::size_t k, std::string name)
        : BregmanManifold(std::make_shared<MultinomialCumulant>(detail::checked_categories(k) - 1, 1.0),
                          std::make_shared<MultinomialNegentropy>(k - 1, 1.0), detail::multinomial_atlas(k, 1.0),
                          std::move(name)),
          k_(k), trials_(1.0) {}

  private:
    std::size_t k_;
    double trials_;
};

class DiscreteMixtureManifold;

/// Categorical distributions: the single-trial multinomial family.
class CategoricalManifold : public MultinomialManifold {
  public:
    explicit CategoricalManifold(std::size_t k) : MultinomialManifold(k, std::string("categorical")) {}

    [[nodiscard]] std::size_t k() const noexcept { return categories(); }

    [[nodiscard]] DiscreteMixtureManifold to_discrete_mixture_manifold() const;
};

/// Mixture family of k point masses. theta: weights p_1..p_{k-1} with the
/// Shannon negentropy as potential; its eta coordinates are the categorical
/// theta coordinates, so the two manifolds are dual charts of one space.
class DiscreteMixtureManifold : public BregmanManifold {
  public:
    explicit DiscreteMixtureManifold(std::size_t k)
        : BregmanManifold(std::make_shared<MultinomialNegentropy>(detail::checked_categories(k) - 1, 1.0),
                          std::make_shared<MultinomialCumulant>(k - 1, 1.0), make_atlas(k), "discrete_mixture"),
          k_(k) {}

    [[nodiscard]] std::size_t k() const noexcept { return k_; }

    [[nodiscard]] CategoricalManifold to_categorical_manifold() const { return CategoricalManifold(k_); }

  private:
    static Atlas make_atlas(std::size_t k) {
        Atlas a;
        a.register_coords(lambda_coords, k);
        a.register_coords(theta_coords, k - 1);
        a.register_coords(eta_coords, k - 1);
        a.register_conversion(lambda_coords, theta_coords, [](const Vector& p) {
            detail::require_simplex(p);
            return Vector(p.head(p.size() - 1));
        });
        a.register_conversion(theta_coords, lambda_coords, [](const Vector& w) { return detail::head_to_simplex(w); });
        a.register_conversion(lambda_coords, eta_coords, [](const Vector& p) { return detail::simplex_to_log_ratio(p); });
        a.register_conversion(eta_coords, lambda_coords, [](const Vector& t) { return detail::log_ratio_to_simplex(t); });
        return a;
    }

    std::size_t k_;
};

inline DiscreteMixtureManifold CategoricalManifold::to_discrete_mixture_manifold() const {
    return DiscreteMixtureManifold(k());
}

/// Categorical point -> theta point of the dual mixture manifold (p_1..p_{k-1}).
[[nodiscard]] inline Point categorical_to_mixture(const CategoricalManifold& cat, const Point& p) {
    return Point(theta_coords, cat.coords(p, DualCoordinate::dual));
}

/// Mixture point -> eta point of the categorical manifold.
[[nodiscard]] inline Point mixture_to_categorical(const DiscreteMixtureManifold& mix, const Point& p) {
    return Point(eta_coords, mix.coords(p, DualCoordinate::primal));
}

/// Add `smoothing` to every bin and renormalize so the histogram is an
/// interior point of the simplex.
[[nodiscard]] inline Vector smooth_histogram(std::span<const double> counts, double smoothing = 1e-8) {
    if (counts.empty())
        throw ArgumentError("histogram is empty");
    if (!(smoothing >= 0.0))
        throw ArgumentError("smoothing must be non-negative");
    Vector h(static_cast<Eigen::Index>(counts.size()));
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (!std::isfinite(counts[i]))
            throw DomainError("histogram bin is not finite", i);
        if (counts[i] < 0.0)
            throw DomainError("histogram bin is negative", i);
        h[static_cast<Eigen::Index>(i)] = counts[i] + smoothing;
    }
    const double total = h.sum();
    if (!(total > 0.0))
        throw DomainError("histogram has no mass");
    return h / total;
}

} // namespace bregkern
