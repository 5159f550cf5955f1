#pragma once

// Independent numerical oracles for the test suite. Nothing here calls into
// the library's solvers; only plain Eigen and the standard library.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Field = std::function<double(const Vec&)>;

inline Vec fd_gradient(const Field& f, const Vec& x, double h = 1e-5) {
    Vec g(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double step = h * std::max(1.0, std::abs(x[i]));
        Vec a = x, b = x;
        a[i] += step;
        b[i] -= step;
        g[i] = (f(a) - f(b)) / (2.0 * step);
    }
    return g;
}

inline Mat fd_hessian(const Field& f, const Vec& x, double h = 1e-4) {
    const auto n = x.size();
    Mat hm(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            const double hi = h * std::max(1.0, std::abs(x[i]));
            const double hj = h * std::max(1.0, std::abs(x[j]));
            auto at = [&](double si, double sj) {
                Vec y = x;
                y[i] += si * hi;
                y[j] += sj * hj;
                return f(y);
            };
            hm(i, j) = (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4.0 * hi * hj);
        }
    return 0.5 * (hm + hm.transpose());
}

/// Jacobian of a vector map by central differences.
inline Mat fd_jacobian(const std::function<Vec(const Vec&)>& f, const Vec& x, double h = 1e-6) {
    const Vec f0 = f(x);
    Mat j(f0.size(), x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double step = h * std::max(1.0, std::abs(x[i]));
        Vec a = x, b = x;
        a[i] += step;
        b[i] -= step;
        j.col(i) = (f(a) - f(b)) / (2.0 * step);
    }
    return j;
}

/// Downhill simplex minimization; returns the best vertex.
inline Vec nelder_mead(const Field& f, const Vec& x0, double step = 0.1, double ftol = 1e-15,
                       int max_iter = 20000) {
    const auto n = x0.size();
    std::vector<Vec> s(static_cast<std::size_t>(n + 1), x0);
    for (Eigen::Index i = 0; i < n; ++i)
        s[static_cast<std::size_t>(i + 1)][i] += step;
    std::vector<double> v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        v[i] = f(s[i]);
    std::vector<std::size_t> order(s.size());
    for (int it = 0; it < max_iter; ++it) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
        const std::size_t best = order.front(), worst = order.back(), second = order[order.size() - 2];
        double spread = 0.0;
        for (const auto& x : s)
            spread = std::max(spread, (x - s[best]).cwiseAbs().maxCoeff());
        if (spread < 1e-9 || std::abs(v[worst] - v[best]) <= ftol * (std::abs(v[best]) + 1e-300))
            break;
        Vec c = Vec::Zero(n);
        for (std::size_t i = 0; i < s.size(); ++i)
            if (i != worst)
                c += s[i];
        c /= static_cast<double>(n);
        const Vec xr = c + (c - s[worst]);
        const double fr = f(xr);
        if (fr < v[best]) {
            const Vec xe = c + 2.0 * (c - s[worst]);
            const double fe = f(xe);
            if (fe < fr) {
                s[worst] = xe;
                v[worst] = fe;
            } else {
                s[worst] = xr;
                v[worst] = fr;
            }
        } else if (fr < v[second]) {
            s[worst] = xr;
            v[worst] = fr;
        } else {
            const bool outside = fr < v[worst];
            const Vec xc = outside ? Vec(c + 0.5 * (xr - c)) : Vec(c + 0.5 * (s[worst] - c));
            const double fc = f(xc);
            if (fc < (outside ? fr : v[worst])) {
                s[worst] = xc;
                v[worst] = fc;
            } else {
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != best) {
                        s[i] = s[best] + 0.5 * (s[i] - s[best]);
                        v[i] = f(s[i]);
                    }
            }
        }
    }
    const auto it = std::min_element(v.begin(), v.end());
    return s[static_cast<std::size_t>(it - v.begin())];
}

/// Restarted Nelder-Mead: polish from the previous answer with a shrinking step.
inline Vec minimize(const Field& f, Vec x0, double step = 0.1, int restarts = 6) {
    for (int r = 0; r < restarts; ++r) {
        x0 = nelder_mead(f, x0, step);
        step *= 0.1;
    }
    return x0;
}

/// argmax of f on the grid lo, lo + step, ..., hi.
inline double grid_argmax(const std::function<double(double)>& f, double lo, double hi, double step) {
    double best_x = lo, best_v = f(lo);
    const auto n = static_cast<long>(std::floor((hi - lo) / step));
    for (long i = 1; i <= n; ++i) {
        const double x = lo + static_cast<double>(i) * step;
        const double v = f(x);
        if (v > best_v) {
            best_v = v;
            best_x = x;
        }
    }
    return best_x;
}

/// Root of a sign-changing scalar function on [lo, hi].
inline double bisect(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-15) {
    double flo = f(lo);
    for (int i = 0; i < 400 && hi - lo > tol * std::max(1.0, std::abs(lo)); ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

inline Mat random_orthogonal(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Mat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = g(rng);
    Eigen::HouseholderQR<Mat> qr(a);
    return qr.householderQ();
}

/// Random SPD matrix with eigenvalues drawn log-uniformly from [lo, hi].
inline Mat random_spd(int n, std::mt19937_64& rng, double lo = 0.5, double hi = 2.0) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    const Mat q = random_orthogonal(n, rng);
    Vec ev(n);
    for (int i = 0; i < n; ++i)
        ev[i] = std::exp(u(rng));
    Mat a = q * ev.asDiagonal() * q.transpose();
    return 0.5 * (a + a.transpose());
}

/// Random interior simplex point with entries bounded away from zero.
inline Vec random_simplex(int k, std::mt19937_64& rng, double floor = 0.02) {
    std::uniform_real_distribution<double> u(floor, 1.0);
    Vec p(k);
    for (int i = 0; i < k; ++i)
        p[i] = u(rng);
    return p / p.sum();
}

inline Vec random_vector(int n, std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    Vec v(n);
    for (int i = 0; i < n; ++i)
        v[i] = u(rng);
    return v;
}

/// sum_i p_i log(p_i / q_i) by direct summation.
inline double discrete_kl(const Vec& p, const Vec& q) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i)
        s += p[i] * std::log(p[i] / q[i]);
    return s;
}

/// KL(N(m1, S1) : N(m2, S2)) from the textbook closed form, with explicit inverses.
inline double normal_kl(const Vec& m1, const Mat& s1, const Vec& m2, const Mat& s2) {
    const Mat inv2 = s2.inverse();
    const Vec dm = m2 - m1;
    const double d = static_cast<double>(m1.size());
    return 0.5 * ((inv2 * s1).trace() + dm.dot(inv2 * dm) - d + std::log(s2.determinant() / s1.determinant()));
}

/// Symmetric matrix function through an eigendecomposition.
inline Mat sym_fn(const Mat& a, const std::function<double(double)>& fn) {
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (a + a.transpose()));
    Vec ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        ev[i] = fn(ev[i]);
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
}

/// Affine-invariant geodesic A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2}.
inline Mat spd_geodesic(const Mat& a, const Mat& b, double t) {
    const Mat s = sym_fn(a, [](double x) { return std::sqrt(x); });
    const Mat si = sym_fn(a, [](double x) { return 1.0 / std::sqrt(x); });
    return s * sym_fn(si * b * si, [t](double x) { return std::pow(x, t); }) * s;
}

inline Mat geometric_mean(const Mat& a, const Mat& b) { return spd_geodesic(a, b, 0.5); }

/// Simpson's rule on [a, b] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 2000) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i)
        s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return s * h / 3.0;
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))); }

inline double rel_err(const Mat& a, const Mat& b) { return (a - b).norm() / std::max(1.0, std::max(a.norm(), b.norm())); }

} // namespace oracle
