#pragma once

#include "bregkern/core/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace bregkern {

enum class LambertBranch { principal, lower };

namespace detail {

inline double lambert_initial(LambertBranch branch, double x) {
    constexpr double inv_e = 1.0 / std::numbers::e;
    const double p2 = 2.0 * (std::numbers::e * x + 1.0);
    const double p = std::sqrt(std::max(p2, 0.0));
    if (branch == LambertBranch::principal) {
        if (x < -0.25)
            return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
        if (x < 3.0)
            return std::log1p(x) * (1.0 - std::log1p(std::log1p(x)) / (2.0 + std::log1p(x)));
        const double l1 = std::log(x);
        const double l2 = std::log(l1);
        return l1 - l2 + l2 / l1;
    }
    if (x < -0.25 || x == -inv_e)
        return -1.0 - p - p * p / 3.0 - 11.0 / 72.0 * p * p * p;
    const double l1 = std::log(-x);
    const double l2 = std::log(-l1);
    return l1 - l2 + l2 / l1;
}

} // namespace detail

/// Real Lambert W: the w with w e^w = x on the requested branch.
///
/// principal: x >= -1/e, w >= -1. lower: -1/e <= x < 0, w <= -1.
[[nodiscard]] inline double lambert_w(LambertBranch branch, double x) {
    constexpr double inv_e = 1.0 / std::numbers::e;
    if (!std::isfinite(x) && !(branch == LambertBranch::principal && x == std::numeric_limits<double>::infinity()))
        throw DomainError("Lambert W argument is not finite");
    if (x < -inv_e) {
        // allow a few ulps of slack at the branch point
        if (x < -inv_e * (1.0 + 4.0 * std::numeric_limits<double>::epsilon()))
            throw DomainError("Lambert W is real only for x >= -1/e, got " + std::to_string(x));
        return -1.0;
    }
    if (branch == LambertBranch::lower && !(x < 0.0))
        throw DomainError("lower Lambert W branch needs x < 0, got " + std::to_string(x));
    if (x == -inv_e)
        return -1.0;
    if (x == 0.0)
        return 0.0;
    if (std::isinf(x))
        return x;

    double w = detail::lambert_initial(branch, x);
    for (int i = 0; i < 64; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double wp1 = w + 1.0;
        if (wp1 == 0.0)
            break;
        const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        const double step = f / denom;
        double next = w - step;
        if (branch == LambertBranch::principal && next < -1.0)
            next = 0.5 * (w - 1.0);
        if (branch == LambertBranch::lower && next > -1.0)
            next = 0.5 * (w - 1.0);
        if (next == w || std::abs(next - w) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(next))
            return next;
        w = next;
    }
    return w;
}

[[nodiscard]] inline double lambert_w(int branch, double x) {
    if (branch == 0)
        return lambert_w(LambertBranch::principal, x);
    if (branch == -1)
        return lambert_w(LambertBranch::lower, x);
    throw ArgumentError("Lambert W branch must be 0 or -1, got " + std::to_string(branch));
}

} // namespace bregkern
