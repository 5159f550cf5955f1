#pragma once

#include "bregkern/core/coords.hpp"
#include "bregkern/core/error.hpp"
#include "bregkern/core/linalg.hpp"

#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bregkern {

using ConversionMap = std::function<Vector(const Vector&)>;

/// Registry of coordinate systems and the directed maps between them.
///
/// Not every pair needs a map: conversion follows the shortest chain of
/// registered edges (breadth-first, ties broken by registration order).
class Atlas {
  public:
    void register_coords(const CoordinateTag& tag, std::size_t dimension) {
        if (dimension == 0)
            throw ArgumentError("coordinate system '" + tag.name() + "' needs positive dimension");
        auto [it, inserted] = dims_.emplace(tag, dimension);
        if (!inserted && it->second != dimension)
            throw ArgumentError("coordinate system '" + tag.name() + "' re-registered with a different dimension");
        if (inserted)
            order_.push_back(tag);
    }

    void register_conversion(const CoordinateTag& from, const CoordinateTag& to, ConversionMap map) {
        if (!contains(from) || !contains(to))
            throw ConversionError(from.name(), to.name(), "register both coordinate systems first");
        if (from == to)
            throw ArgumentError("self-conversion is implicit");
        if (!edges_.contains({from, to}))
            adjacency_[from].push_back(to);
        edges_[{from, to}] = std::move(map);
    }

    [[nodiscard]] bool contains(const CoordinateTag& tag) const { return dims_.contains(tag); }

    [[nodiscard]] std::size_t dimension(const CoordinateTag& tag) const {
        auto it = dims_.find(tag);
        if (it == dims_.end())
            throw ConversionError(tag.name(), tag.name(), "coordinate system '" + tag.name() + "' is not registered");
        return it->second;
    }

    [[nodiscard]] const std::vector<CoordinateTag>& tags() const noexcept { return order_; }

    /// Tags visited from `from` to `to`, both inclusive.
    [[nodiscard]] std::vector<CoordinateTag> path(const CoordinateTag& from, const CoordinateTag& to) const {
        if (!contains(from))
            throw ConversionError(from.name(), to.name(), "'" + from.name() + "' is not registered");
        if (!contains(to))
            throw ConversionError(from.name(), to.name(), "'" + to.name() + "' is not registered");
        if (from == to)
            return {from};
        std::map<CoordinateTag, CoordinateTag> parent;
        std::deque<CoordinateTag> queue{from};
        parent.emplace(from, from);
        while (!queue.empty()) {
            CoordinateTag cur = queue.front();
            queue.pop_front();
            auto adj = adjacency_.find(cur);
            if (adj == adjacency_.end())
                continue;
            for (const auto& next : adj->second) {
                if (parent.contains(next))
                    continue;
                parent.emplace(next, cur);
                if (next == to) {
                    std::vector<CoordinateTag> out{to};
                    for (CoordinateTag t = to; !(t == from);) {
                        t = parent.at(t);
                        out.push_back(t);
                    }
                    return {out.rbegin(), out.rend()};
                }
                queue.push_back(next);
            }
        }
        throw ConversionError(from.name(), to.name(), "no conversion path");
    }

    [[nodiscard]] Vector convert(const CoordinateTag& from, const CoordinateTag& to, const Vector& data) const {
        const auto expected = dimension(from);
        if (data.size() != static_cast<Eigen::Index>(expected))
            throw DomainError("'" + from.name() + "' coordinates need " + std::to_string(expected) + " values, got " +
                              std::to_string(data.size()));
        const auto route = path(from, to);
        Vector cur = data;
        for (std::size_t i = 1; i < route.size(); ++i)
            cur = edges_.at({route[i - 1], route[i]})(cur);
        return cur;
    }

  private:
    std::map<CoordinateTag, std::size_t> dims_;
    std::vector<CoordinateTag> order_;
    std::map<std::pair<CoordinateTag, CoordinateTag>, ConversionMap> edges_;
    std::map<CoordinateTag, std::vector<CoordinateTag>> adjacency_;
};

} // namespace bregkern
