#pragma once

#include "bregkern/core/error.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <string>

namespace bregkern {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Number of free entries of a symmetric n x n matrix.
[[nodiscard]] constexpr std::size_t sym_size(std::size_t n) noexcept { return n * (n + 1) / 2; }

/// Inverse of sym_size; throws if m is not triangular.
[[nodiscard]] inline std::size_t sym_order(std::size_t m) {
    std::size_t n = 0;
    while (sym_size(n) < m)
        ++n;
    if (sym_size(n) != m)
        throw ArgumentError("length " + std::to_string(m) + " is not a triangular number");
    return n;
}

/// Two ways of laying out the upper triangle of a symmetric matrix, row-major.
///
/// `plain` stores each entry once as-is. `isometric` multiplies off-diagonal
/// entries by sqrt(2) so that the dot product of two flattened vectors equals
/// trace(A B); flat coordinates of matrix-valued generators use it.
enum class SymLayout { plain, isometric };

[[nodiscard]] inline Vector flatten_sym(const Matrix& a, SymLayout layout = SymLayout::plain) {
    const auto n = static_cast<std::size_t>(a.rows());
    const double off = layout == SymLayout::isometric ? std::sqrt(2.0) : 1.0;
    Vector out(static_cast<Eigen::Index>(sym_size(n)));
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = i; j < a.cols(); ++j)
            out[k++] = i == j ? a(i, i) : off * 0.5 * (a(i, j) + a(j, i));
    return out;
}

[[nodiscard]] inline Matrix unflatten_sym(const Eigen::Ref<const Vector>& v, SymLayout layout = SymLayout::plain) {
    const auto n = static_cast<Eigen::Index>(sym_order(static_cast<std::size_t>(v.size())));
    const double off = layout == SymLayout::isometric ? 1.0 / std::sqrt(2.0) : 1.0;
    Matrix a(n, n);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i; j < n; ++j) {
            const double x = i == j ? v[k] : off * v[k];
            a(i, j) = x;
            a(j, i) = x;
            ++k;
        }
    return a;
}

/// Symmetric unit matrix for the k-th flattened coordinate (the derivative of
/// unflatten_sym along basis vector e_k).
[[nodiscard]] inline Matrix sym_basis(std::size_t n, std::size_t k, SymLayout layout) {
    Vector e = Vector::Zero(static_cast<Eigen::Index>(sym_size(n)));
    e[static_cast<Eigen::Index>(k)] = 1.0;
    return unflatten_sym(e, layout);
}

/// Flat index of diagonal entry (i, i).
[[nodiscard]] constexpr std::size_t sym_diag_index(std::size_t n, std::size_t i) noexcept {
    // rows 0..i-1 contribute n, n-1, ..., n-i+1 entries
    return i * n - i * (i - 1) / 2;
}

[[nodiscard]] inline bool all_finite(const Eigen::Ref<const Vector>& v) noexcept { return v.allFinite(); }

/// Index of the first diagonal pivot where Cholesky of a fails, or -1.
[[nodiscard]] inline Eigen::Index cholesky_failure(const Matrix& a) {
    const Eigen::Index n = a.rows();
    Matrix l = Matrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        double d = a(j, j) - l.row(j).head(j).squaredNorm();
        if (!(d > 0.0) || !std::isfinite(d))
            return j;
        l(j, j) = std::sqrt(d);
        for (Eigen::Index i = j + 1; i < n; ++i)
            l(i, j) = (a(i, j) - l.row(i).head(j).dot(l.row(j).head(j))) / l(j, j);
    }
    return -1;
}

[[nodiscard]] inline bool is_spd(const Matrix& a) {
    return a.rows() == a.cols() && a.allFinite() && (a - a.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * (1.0 + a.cwiseAbs().maxCoeff()) &&
           cholesky_failure(a) < 0;
}

inline void require_spd(const Matrix& a, const char* what) {
    if (a.rows() != a.cols())
        throw DomainError(std::string(what) + " is not square");
    const Eigen::Index bad = cholesky_failure(0.5 * (a + a.transpose()));
    if (!a.allFinite() || bad >= 0)
        throw DomainError(std::string(what) + " is not symmetric positive definite",
                          bad >= 0 ? std::optional<std::size_t>(static_cast<std::size_t>(bad)) : std::nullopt);
}

namespace detail {
inline constexpr double eigen_floor = 1e-300;
}

/// f(A) = V diag(f(lambda)) V^T for symmetric positive definite A.
template <class Fn>
[[nodiscard]] Matrix spd_function(const Matrix& a, Fn&& fn) {
    require_spd(a, "matrix");
    Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (a + a.transpose()));
    if (eig.info() != Eigen::Success)
        throw DomainError("symmetric eigendecomposition failed");
    Vector lam = eig.eigenvalues();
    for (Eigen::Index i = 0; i < lam.size(); ++i)
        lam[i] = fn(std::max(lam[i], detail::eigen_floor));
    const Matrix& v = eig.eigenvectors();
    Matrix out = v * lam.asDiagonal() * v.transpose();
    return 0.5 * (out + out.transpose());
}

[[nodiscard]] inline Matrix spd_sqrt(const Matrix& a) {
    return spd_function(a, [](double x) { return std::sqrt(x); });
}

[[nodiscard]] inline Matrix spd_inv_sqrt(const Matrix& a) {
    return spd_function(a, [](double x) { return 1.0 / std::sqrt(x); });
}

[[nodiscard]] inline Matrix spd_log(const Matrix& a) {
    return spd_function(a, [](double x) { return std::log(x); });
}

[[nodiscard]] inline Matrix spd_power(const Matrix& a, double t) {
    return spd_function(a, [t](double x) { return std::pow(x, t); });
}

/// Inverse of a symmetric positive definite matrix via Cholesky.
[[nodiscard]] inline Matrix spd_inverse(const Matrix& a) {
    require_spd(a, "matrix");
    Eigen::LLT<Matrix> llt(0.5 * (a + a.transpose()));
    Matrix inv = llt.solve(Matrix::Identity(a.rows(), a.cols()));
    return 0.5 * (inv + inv.transpose());
}

[[nodiscard]] inline double spd_logdet(const Matrix& a) {
    require_spd(a, "matrix");
    Eigen::LLT<Matrix> llt(0.5 * (a + a.transpose()));
    return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

} // namespace bregkern
