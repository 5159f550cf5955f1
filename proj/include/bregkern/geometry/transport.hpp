#pragma once

#include "bregkern/core/manifold.hpp"

namespace bregkern {

/// Parallel transport of the flat connection attached to dc.
///
/// In its own affine chart the connection has zero Christoffel symbols, so
/// the components of v are carried over unchanged.
[[nodiscard]] inline Vector dual_parallel_transport(const BregmanManifold& m, const Vector& v, const Point& from,
                                                    const Point& to, DualCoordinate dc) {
    const Vector a = m.coords(from, dc);
    (void)m.coords(to, dc);
    if (v.size() != a.size())
        throw DomainError("tangent vector length does not match manifold dimension");
    return v;
}

} // namespace bregkern
