#pragma once

#include "bregkern/io/files.hpp"
#include "bregkern/viz/scene.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <filesystem>
#include <limits>
#include <string>

namespace bregkern {

namespace svg {

inline constexpr double width = 800.0;
inline constexpr double height = 600.0;
inline constexpr double margin = 0.05;

struct Bounds {
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -std::numeric_limits<double>::infinity();
    double ymin = std::numeric_limits<double>::infinity();
    double ymax = -std::numeric_limits<double>::infinity();

    void add(const Vec2& v) {
        if (!v.allFinite())
            return;
        xmin = std::min(xmin, v.x());
        xmax = std::max(xmax, v.x());
        ymin = std::min(ymin, v.y());
        ymax = std::max(ymax, v.y());
    }
};

/// Data bounds of every drawable, padded by 5%; degenerate extents widen to +-1.
inline Bounds scene_bounds(const Scene& s) {
    Bounds b;
    for (const auto& p : s.points())
        b.add(p.xy);
    for (const auto& l : s.polylines())
        for (const auto& v : l.xy)
            b.add(v);
    for (const auto& l : s.polygons())
        for (const auto& v : l.xy)
            b.add(v);
    if (!(b.xmin <= b.xmax)) {
        b = {-1.0, 1.0, -1.0, 1.0};
    }
    auto widen = [](double& lo, double& hi) {
        if (hi - lo <= 0.0) {
            lo -= 1.0;
            hi += 1.0;
        }
        const double pad = margin * (hi - lo);
        lo -= pad;
        hi += pad;
    };
    widen(b.xmin, b.xmax);
    widen(b.ymin, b.ymax);
    return b;
}

inline std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

class Canvas {
  public:
    explicit Canvas(const Bounds& b) : b_(b) {}

    [[nodiscard]] double px(double x) const { return (x - b_.xmin) / (b_.xmax - b_.xmin) * width; }
    [[nodiscard]] double py(double y) const { return height - (y - b_.ymin) / (b_.ymax - b_.ymin) * height; }

    [[nodiscard]] std::string coords(const std::vector<Vec2>& xy) const {
        std::string out;
        for (const auto& v : xy) {
            if (!v.allFinite())
                continue;
            if (!out.empty())
                out += ' ';
            out += fmt::format("{:.3f},{:.3f}", px(v.x()), py(v.y()));
        }
        return out;
    }

  private:
    Bounds b_;
};

inline std::string style_attrs(const Style& st, bool fill) {
    if (fill)
        return fmt::format("fill=\"{}\" fill-opacity=\"{:.3f}\" stroke=\"{}\" stroke-width=\"{:.2f}\"", st.color,
                           0.2 * st.opacity, st.color, st.width);
    return fmt::format("fill=\"none\" stroke=\"{}\" stroke-opacity=\"{:.3f}\" stroke-width=\"{:.2f}\"", st.color,
                       st.opacity, st.width);
}

} // namespace svg

/// Deterministic SVG 1.1 rendering on an 800x600 canvas.
///
/// Data bounds (plus 5%) map onto the pixel viewBox with y pointing up.
/// Points are r=3 circles, curves polylines, ellipses polygons; the legend
/// lists labeled items with rectangle swatches.
[[nodiscard]] inline std::string render_svg(const Scene& scene) {
    const svg::Bounds b = svg::scene_bounds(scene);
    const svg::Canvas cv(b);
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0:.0f}\" height=\"{1:.0f}\" "
                       "viewBox=\"0 0 {0:.0f} {1:.0f}\">\n",
                       svg::width, svg::height);
    out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{:.0f}\" height=\"{:.0f}\" fill=\"white\" stroke=\"#444444\"/>\n",
                       svg::width, svg::height);

    // axes through the origin when visible, otherwise along the lower/left edge
    const double ax = (b.xmin <= 0.0 && 0.0 <= b.xmax) ? cv.px(0.0) : 0.0;
    const double ay = (b.ymin <= 0.0 && 0.0 <= b.ymax) ? cv.py(0.0) : svg::height;
    out += fmt::format("<line class=\"axis\" x1=\"0.000\" y1=\"{0:.3f}\" x2=\"{1:.3f}\" y2=\"{0:.3f}\" stroke=\"#888888\"/>\n",
                       ay, svg::width);
    out += fmt::format("<line class=\"axis\" x1=\"{0:.3f}\" y1=\"0.000\" x2=\"{0:.3f}\" y2=\"{1:.3f}\" stroke=\"#888888\"/>\n",
                       ax, svg::height);
    const auto& idx = scene.index();
    const std::string tag = svg::escape(scene.display().name());
    out += fmt::format("<text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"12\" text-anchor=\"end\">{}[{}]</text>\n",
                       svg::width - 6.0, svg::height - 6.0, tag, idx[0]);
    out += fmt::format("<text x=\"6.000\" y=\"16.000\" font-size=\"12\">{}[{}]</text>\n", tag, idx[1]);
    out += fmt::format("<text x=\"6.000\" y=\"{:.3f}\" font-size=\"10\">x: [{:.4g}, {:.4g}]  y: [{:.4g}, {:.4g}]</text>\n",
                       svg::height - 6.0, b.xmin, b.xmax, b.ymin, b.ymax);

    for (const auto& poly : scene.polygons())
        out += fmt::format("<polygon points=\"{}\" {}/>\n", cv.coords(poly.xy), svg::style_attrs(poly.style, true));
    for (const auto& line : scene.polylines())
        out += fmt::format("<polyline points=\"{}\" {}/>\n", cv.coords(line.xy), svg::style_attrs(line.style, false));
    for (const auto& p : scene.points())
        out += fmt::format("<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"3\" fill=\"{}\" fill-opacity=\"{:.3f}\"/>\n",
                           cv.px(p.xy.x()), cv.py(p.xy.y()), p.style.color, p.style.opacity);

    std::vector<const Style*> legend;
    for (const auto& l : scene.polylines())
        legend.push_back(&l.style);
    for (const auto& l : scene.polygons())
        legend.push_back(&l.style);
    for (const auto& p : scene.points())
        legend.push_back(&p.style);
    double y = 24.0;
    for (const Style* st : legend) {
        if (st->label.empty())
            continue;
        out += fmt::format("<rect x=\"{:.3f}\" y=\"{:.3f}\" width=\"10\" height=\"10\" fill=\"{}\"/>\n",
                           svg::width - 200.0, y - 9.0, st->color);
        out += fmt::format("<text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"11\">{}</text>\n", svg::width - 184.0, y,
                           svg::escape(st->label));
        y += 15.0;
    }
    out += "</svg>\n";
    return out;
}

inline void export_scene(const Scene& scene, const std::filesystem::path& path) {
    write_text_file(path, render_svg(scene));
}

} // namespace bregkern
