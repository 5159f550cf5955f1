#pragma once

#include "bregkern/core/error.hpp"
#include "bregkern/core/linalg.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <utility>

namespace bregkern {

/// Name of a coordinate system. Two tags are equal iff their names are.
class CoordinateTag {
  public:
    CoordinateTag() = default;
    explicit CoordinateTag(std::string name) : name_(std::move(name)) {
        if (name_.empty())
            throw ArgumentError("coordinate tag name must be non-empty");
    }

    [[nodiscard]] const std::string& name() const noexcept { return name_; }

    friend bool operator==(const CoordinateTag&, const CoordinateTag&) = default;
    friend auto operator<=>(const CoordinateTag&, const CoordinateTag&) = default;

  private:
    std::string name_;
};

inline const CoordinateTag theta_coords{"theta"};
inline const CoordinateTag eta_coords{"eta"};
inline const CoordinateTag lambda_coords{"lambda"};

/// The two flat (affine) coordinate systems of a Bregman manifold.
enum class DualCoordinate { primal, dual };

[[nodiscard]] inline const CoordinateTag& to_tag(DualCoordinate dc) noexcept {
    return dc == DualCoordinate::primal ? theta_coords : eta_coords;
}

[[nodiscard]] inline DualCoordinate opposite(DualCoordinate dc) noexcept {
    return dc == DualCoordinate::primal ? DualCoordinate::dual : DualCoordinate::primal;
}

[[nodiscard]] inline std::string_view to_string(DualCoordinate dc) noexcept {
    return dc == DualCoordinate::primal ? "theta" : "eta";
}

/// Parameter values tagged with the coordinate system they are expressed in.
///
/// Points do not know which manifold they live on; shape and domain are
/// checked by the operation that consumes them.
struct Point {
    CoordinateTag coords;
    Vector data;

    Point(CoordinateTag tag, Vector values) : coords(std::move(tag)), data(std::move(values)) {
        if (!data.allFinite())
            throw DomainError("point data must be finite");
    }

    [[nodiscard]] Eigen::Index size() const noexcept { return data.size(); }
};

} // namespace bregkern
