#pragma once

// Forward-mode automatic differentiation with dual numbers.
//
// A scalar field is written once as a generic callable taking
// `const std::vector<S>&` and returning `S`. Calling it with S = double
// evaluates it; S = Dual<double> yields a directional derivative and
// S = Dual<Dual<double>> a second mixed derivative. Math functions are found
// by ADL, so generic code should write `using std::log; log(x)`.

#include "bregkern/core/error.hpp"
#include "bregkern/core/linalg.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

namespace bregkern::ad {

template <class T>
struct Dual {
    T val{};
    T eps{};

    constexpr Dual() = default;
    constexpr Dual(double v) : val(v), eps(0.0) {} // NOLINT: implicit on purpose, constants mix freely
    constexpr Dual(T v, T e) requires(!std::is_same_v<T, double>) : val(std::move(v)), eps(std::move(e)) {}
    constexpr Dual(double v, double e) requires std::is_same_v<T, double> : val(v), eps(e) {}

    Dual& operator+=(const Dual& o) { val += o.val; eps += o.eps; return *this; }
    Dual& operator-=(const Dual& o) { val -= o.val; eps -= o.eps; return *this; }
    Dual& operator*=(const Dual& o) { *this = *this * o; return *this; }
    Dual& operator/=(const Dual& o) { *this = *this / o; return *this; }
};

template <class T>
struct is_dual : std::false_type {};
template <class T>
struct is_dual<Dual<T>> : std::true_type {};

/// Innermost real value of a possibly nested dual.
[[nodiscard]] inline double value_of(double x) noexcept { return x; }
template <class T>
[[nodiscard]] double value_of(const Dual<T>& x) noexcept { return value_of(x.val); }

/// Raised by primitives (log, sqrt, ...) evaluated outside their domain.
/// `tangent` is the first-order seed component of the bad argument; a nonzero
/// value means the argument depends on the seeded coordinate.
struct PrimitiveDomainError {
    const char* primitive;
    double argument;
    double tangent;
};

namespace detail {
template <class T>
double first_tangent(const Dual<T>& x) {
    if constexpr (std::is_same_v<T, double>)
        return x.eps;
    else
        return value_of(x.eps);
}
} // namespace detail

template <class T> Dual<T> operator+(const Dual<T>& a, const Dual<T>& b) { return {a.val + b.val, a.eps + b.eps}; }
template <class T> Dual<T> operator-(const Dual<T>& a, const Dual<T>& b) { return {a.val - b.val, a.eps - b.eps}; }
template <class T> Dual<T> operator-(const Dual<T>& a) { return {-a.val, -a.eps}; }
template <class T> Dual<T> operator*(const Dual<T>& a, const Dual<T>& b) { return {a.val * b.val, a.eps * b.val + a.val * b.eps}; }
template <class T> Dual<T> operator/(const Dual<T>& a, const Dual<T>& b) {
    T inv = T(1.0) / b.val;
    return {a.val * inv, (a.eps - a.val * inv * b.eps) * inv};
}

template <class T> Dual<T> operator+(const Dual<T>& a, double b) { return {a.val + b, a.eps}; }
template <class T> Dual<T> operator+(double a, const Dual<T>& b) { return {a + b.val, b.eps}; }
template <class T> Dual<T> operator-(const Dual<T>& a, double b) { return {a.val - b, a.eps}; }
template <class T> Dual<T> operator-(double a, const Dual<T>& b) { return {a - b.val, -b.eps}; }
template <class T> Dual<T> operator*(const Dual<T>& a, double b) { return {a.val * b, a.eps * b}; }
template <class T> Dual<T> operator*(double a, const Dual<T>& b) { return {a * b.val, a * b.eps}; }
template <class T> Dual<T> operator/(const Dual<T>& a, double b) { return {a.val / b, a.eps / b}; }
template <class T> Dual<T> operator/(double a, const Dual<T>& b) { return Dual<T>(a) / b; }

template <class T> bool operator<(const Dual<T>& a, const Dual<T>& b) { return value_of(a) < value_of(b); }
template <class T> bool operator>(const Dual<T>& a, const Dual<T>& b) { return value_of(a) > value_of(b); }
template <class T> bool operator<(const Dual<T>& a, double b) { return value_of(a) < b; }
template <class T> bool operator>(const Dual<T>& a, double b) { return value_of(a) > b; }
template <class T> bool operator<=(const Dual<T>& a, double b) { return value_of(a) <= b; }
template <class T> bool operator>=(const Dual<T>& a, double b) { return value_of(a) >= b; }

template <class T>
Dual<T> exp(const Dual<T>& a) {
    using std::exp;
    T e = exp(a.val);
    return {e, a.eps * e};
}

template <class T>
Dual<T> log(const Dual<T>& a) {
    using std::log;
    if (!(value_of(a) > 0.0))
        throw PrimitiveDomainError{"log", value_of(a), detail::first_tangent(a)};
    return {log(a.val), a.eps / a.val};
}

template <class T>
Dual<T> log1p(const Dual<T>& a) {
    using std::log1p;
    if (!(value_of(a) > -1.0))
        throw PrimitiveDomainError{"log1p", value_of(a), detail::first_tangent(a)};
    return {log1p(a.val), a.eps / (1.0 + a.val)};
}

template <class T>
Dual<T> sqrt(const Dual<T>& a) {
    using std::sqrt;
    if (!(value_of(a) > 0.0))
        throw PrimitiveDomainError{"sqrt", value_of(a), detail::first_tangent(a)};
    T s = sqrt(a.val);
    return {s, a.eps / (2.0 * s)};
}

template <class T>
Dual<T> pow(const Dual<T>& a, double p) {
    using std::pow;
    return {pow(a.val, p), p * pow(a.val, p - 1.0) * a.eps};
}

template <class T>
Dual<T> sin(const Dual<T>& a) {
    using std::cos;
    using std::sin;
    return {sin(a.val), a.eps * cos(a.val)};
}

template <class T>
Dual<T> cos(const Dual<T>& a) {
    using std::cos;
    using std::sin;
    return {cos(a.val), -(a.eps * sin(a.val))};
}

/// Scalar field type-erased over the three evaluation modes used here.
template <class F>
concept ScalarField = requires(const F& f, const std::vector<double>& x, const std::vector<Dual<double>>& dx,
                               const std::vector<Dual<Dual<double>>>& ddx) {
    { f(x) };
    { f(dx) };
    { f(ddx) };
};

namespace detail {

template <class F>
std::optional<std::size_t> locate_domain_violation(const F& f, const Vector& x) {
    const auto n = static_cast<std::size_t>(x.size());
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Dual<double>> s(n);
        for (std::size_t k = 0; k < n; ++k)
            s[k] = Dual<double>(x[static_cast<Eigen::Index>(k)], k == j ? 1.0 : 0.0);
        try {
            (void)f(s);
        } catch (const PrimitiveDomainError& e) {
            if (e.tangent != 0.0)
                return j;
        }
    }
    return std::nullopt;
}

[[noreturn]] inline void rethrow_domain(const PrimitiveDomainError& e, std::optional<std::size_t> index) {
    throw DomainError(std::string(e.primitive) + " evaluated at " + std::to_string(e.argument), index);
}

} // namespace detail

/// Evaluate f at x with plain doubles.
template <class F>
[[nodiscard]] double evaluate(const F& f, const Vector& x) {
    std::vector<double> v(x.data(), x.data() + x.size());
    return static_cast<double>(f(v));
}

/// Exact gradient of the composed arithmetic, one forward sweep per coordinate.
template <class F>
[[nodiscard]] Vector gradient(const F& f, const Vector& x) {
    const auto n = static_cast<std::size_t>(x.size());
    Vector g(x.size());
    std::vector<Dual<double>> s(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k)
            s[k] = Dual<double>(x[static_cast<Eigen::Index>(k)], k == i ? 1.0 : 0.0);
        try {
            g[static_cast<Eigen::Index>(i)] = f(s).eps;
        } catch (const PrimitiveDomainError& e) {
            detail::rethrow_domain(e, detail::locate_domain_violation(f, x));
        }
    }
    return g;
}

/// Exact Hessian via nested duals; output is symmetrized as (H + H^T) / 2.
template <class F>
[[nodiscard]] Matrix hessian(const F& f, const Vector& x) {
    using DD = Dual<Dual<double>>;
    const auto n = static_cast<std::size_t>(x.size());
    Matrix h(x.size(), x.size());
    std::vector<DD> s(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k)
                s[k] = DD(Dual<double>(x[static_cast<Eigen::Index>(k)], k == j ? 1.0 : 0.0),
                          Dual<double>(k == i ? 1.0 : 0.0, 0.0));
            try {
                h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = f(s).eps.eps;
            } catch (const PrimitiveDomainError& e) {
                detail::rethrow_domain(e, detail::locate_domain_violation(f, x));
            }
        }
    return 0.5 * (h + h.transpose());
}

} // namespace bregkern::ad

namespace bregkern {

/// Gradient of a generic scalar field by forward-mode AD.
template <class F>
[[nodiscard]] Vector ad_gradient(const F& f, const Vector& x) {
    return ad::gradient(f, x);
}

/// Hessian of a generic scalar field by nested forward-mode AD.
template <class F>
[[nodiscard]] Matrix ad_hessian(const F& f, const Vector& x) {
    return ad::hessian(f, x);
}

} // namespace bregkern
