#pragma once

#include "bregkern/core/coords.hpp"
#include "bregkern/core/error.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace bregkern {

/// A parametrized path t in [0, 1] -> Point.
class Curve {
  public:
    using Map = std::function<Point(double)>;

    explicit Curve(Map map) : map_(std::move(map)) {
        if (!map_)
            throw ArgumentError("curve needs a parametrization");
    }

    [[nodiscard]] Point operator()(double t) const { return at(t); }

    [[nodiscard]] Point at(double t) const {
        if (!(t >= 0.0 && t <= 1.0))
            throw ArgumentError("curve parameter must lie in [0, 1]");
        return map_(t);
    }

    /// n + 1 points at t = i / n.
    [[nodiscard]] std::vector<Point> sample(std::size_t n = 256) const {
        if (n == 0)
            throw ArgumentError("need at least one sampling interval");
        std::vector<Point> out;
        out.reserve(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            out.push_back(map_(i == n ? 1.0 : static_cast<double>(i) / static_cast<double>(n)));
        return out;
    }

  private:
    Map map_;
};

} // namespace bregkern
