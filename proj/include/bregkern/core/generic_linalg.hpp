#pragma once

// Dense symmetric helpers templated on the scalar type, so matrix-valued
// potentials can be written once and differentiated with ad::Dual.

#include "bregkern/core/linalg.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

namespace bregkern::generic {

template <class S>
using SymMatrix = std::vector<std::vector<S>>;

/// Rebuild an n x n symmetric matrix from flat[offset, offset + n(n+1)/2).
template <class S>
SymMatrix<S> unflatten(const std::vector<S>& flat, std::size_t offset, std::size_t n, SymLayout layout) {
    const double off = layout == SymLayout::isometric ? 1.0 / std::sqrt(2.0) : 1.0;
    SymMatrix<S> a(n, std::vector<S>(n));
    std::size_t k = offset;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            S x = i == j ? flat[k] : flat[k] * off;
            a[i][j] = x;
            a[j][i] = x;
            ++k;
        }
    return a;
}

/// LDL^T factorization without pivoting; returns false on a non-positive pivot.
template <class S>
bool ldl(const SymMatrix<S>& a, SymMatrix<S>& l, std::vector<S>& d) {
    const std::size_t n = a.size();
    l.assign(n, std::vector<S>(n, S(0.0)));
    d.assign(n, S(0.0));
    for (std::size_t j = 0; j < n; ++j) {
        S dj = a[j][j];
        for (std::size_t k = 0; k < j; ++k)
            dj = dj - l[j][k] * l[j][k] * d[k];
        if (!(dj > 0.0))
            return false;
        d[j] = dj;
        l[j][j] = S(1.0);
        for (std::size_t i = j + 1; i < n; ++i) {
            S v = a[i][j];
            for (std::size_t k = 0; k < j; ++k)
                v = v - l[i][k] * l[j][k] * d[k];
            l[i][j] = v / dj;
        }
    }
    return true;
}

/// log det of an SPD matrix. The caller guarantees positive definiteness.
template <class S>
S logdet(const SymMatrix<S>& a) {
    using std::log;
    SymMatrix<S> l;
    std::vector<S> d;
    ldl(a, l, d);
    S out(0.0);
    for (const auto& x : d)
        out = out + log(x);
    return out;
}

/// b^T A^{-1} b for SPD A.
template <class S>
S inverse_quadratic_form(const SymMatrix<S>& a, const std::vector<S>& b) {
    SymMatrix<S> l;
    std::vector<S> d;
    ldl(a, l, d);
    const std::size_t n = a.size();
    // solve L y = b; then b^T A^{-1} b = sum y_i^2 / d_i
    std::vector<S> y(n);
    S out(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        S v = b[i];
        for (std::size_t k = 0; k < i; ++k)
            v = v - l[i][k] * y[k];
        y[i] = v;
        out = out + v * v / d[i];
    }
    return out;
}

} // namespace bregkern::generic
