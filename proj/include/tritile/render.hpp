// SPDX-License-Identifier: MIT
//
// SVG rendering.  The only place in the library where floating point
// appears: lattice points map to Cartesian coordinates through
// x = a + b/2, y = -b*sqrt(3)/2 (the sign flip points screen y down),
// and every coordinate is printed with six decimals.  Output is a
// deterministic function of the tiling and the style: one polygon per
// tile in canonical order, colored by the rank of its size, optional
// size labels, and the region outline on top.

#ifndef TRITILE_RENDER_HPP
#define TRITILE_RENDER_HPP

#include "tritile/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

namespace tritile {

struct RenderStyle {
    double px_per_unit = 40.0;
    double stroke_width = 1.0;
    bool labels = false;
    // Labels are dropped on tiles whose text would come out smaller
    // than this many pixels, so only the larger sizes are marked.
    double min_label_px = 8.0;
    std::vector<std::string> palette = {
        "#a6cee3", "#b2df8a", "#fdbf6f", "#fb9a99", "#cab2d6", "#ffff99",
        "#1f78b4", "#33a02c", "#ff7f00", "#e31a1c", "#6a3d9a", "#b15928",
    };
};

namespace detail {

inline double approx(const ExactScalar& x) { return x.convert_to<double>(); }

inline double render_x(const LatticePoint& p) { return approx(p.a) + approx(p.b) / 2.0; }

inline double render_y(const LatticePoint& p) {
    return -approx(p.b) * std::sqrt(3.0) / 2.0;
}

inline std::string fixed6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

} // namespace detail

inline std::string render_svg(const Tiling& t, const RenderStyle& style = {}) {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    for (const auto& v : t.region().vertices()) {
        double x = detail::render_x(v);
        double y = detail::render_y(v);
        xmin = first ? x : std::min(xmin, x);
        xmax = first ? x : std::max(xmax, x);
        ymin = first ? y : std::min(ymin, y);
        ymax = first ? y : std::max(ymax, y);
        first = false;
    }
    double pad = style.stroke_width + 8.0;
    double w = (xmax - xmin) * style.px_per_unit + 2 * pad;
    double h = (ymax - ymin) * style.px_per_unit + 2 * pad;
    auto px = [&](const LatticePoint& p) {
        return std::pair<double, double>{
            pad + (detail::render_x(p) - xmin) * style.px_per_unit,
            pad + (detail::render_y(p) - ymin) * style.px_per_unit};
    };

    std::map<ExactScalar, std::size_t> rank;
    for (const auto& tile : t.tiles()) rank.emplace(tile.size, 0);
    std::size_t next = 0;
    for (auto& [size, r] : rank) r = next++;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fixed6(w) +
           "\" height=\"" + detail::fixed6(h) + "\" viewBox=\"0 0 " + detail::fixed6(w) + " " +
           detail::fixed6(h) + "\">\n";
    for (const auto& tile : t.tiles()) {
        out += "<polygon points=\"";
        bool sep = false;
        for (const auto& v : tile_vertices(tile)) {
            auto [x, y] = px(v);
            if (sep) out += " ";
            out += detail::fixed6(x) + "," + detail::fixed6(y);
            sep = true;
        }
        const std::string& fill = style.palette[rank[tile.size] % style.palette.size()];
        out += "\" fill=\"" + fill + "\" stroke=\"#444444\" stroke-width=\"" +
               detail::fixed6(style.stroke_width) + "\" stroke-linejoin=\"round\"/>\n";
    }
    if (style.labels) {
        for (const auto& tile : t.tiles()) {
            double side = detail::approx(tile.size) * style.px_per_unit;
            double font = 0.38 * side;
            if (font < style.min_label_px) continue;
            auto [x, y] = px(tile_centroid(tile));
            out += "<text x=\"" + detail::fixed6(x) + "\" y=\"" + detail::fixed6(y) +
                   "\" font-size=\"" + detail::fixed6(font) +
                   "\" font-family=\"sans-serif\" text-anchor=\"middle\" "
                   "dominant-baseline=\"central\">" +
                   exact_str(tile.size) + "</text>\n";
        }
    }
    out += "<polygon points=\"";
    bool sep = false;
    for (const auto& v : t.region().vertices()) {
        auto [x, y] = px(v);
        if (sep) out += " ";
        out += detail::fixed6(x) + "," + detail::fixed6(y);
        sep = true;
    }
    out += "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" +
           detail::fixed6(2 * style.stroke_width) + "\" stroke-linejoin=\"round\"/>\n";
    out += "</svg>\n";
    return out;
}

} // namespace tritile

#endif // TRITILE_RENDER_HPP
