// SPDX-License-Identifier: MIT
//
// SVG output: element counts, labeling, geometry of the bounding box,
// and byte determinism.

#include "tritile/render.hpp"
#include "tritile/tritile_io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <string>

using namespace tritile;

namespace {

long long count_of(const std::string& text, const std::string& needle) {
    long long n = 0;
    for (std::size_t at = text.find(needle); at != std::string::npos;
         at = text.find(needle, at + needle.size()))
        ++n;
    return n;
}

double attr_of(const std::string& text, const std::string& name) {
    std::size_t at = text.find(name + "=\"");
    REQUIRE(at != std::string::npos);
    return std::stod(text.substr(at + name.size() + 2));
}

} // namespace

TEST_CASE("unit triangle renders as one tile polygon plus outline") {
    Tiling unit(make_triangle(1), {Tile(Orientation::Up, {0, 0}, 1)});
    std::string svg = render_svg(unit);
    CHECK(count_of(svg, "<polygon") == 2);
    CHECK(count_of(svg, "<text") == 0);

    // Three coordinate pairs on the tile polygon.
    std::size_t start = svg.find("points=\"");
    std::size_t stop = svg.find('"', start + 8);
    std::string points = svg.substr(start + 8, stop - start - 8);
    CHECK(count_of(points, ",") == 3);

    CHECK(render_svg(unit) == svg);
}

TEST_CASE("gallery row c renders with the expected proportions") {
    Tiling t = read_tritile(std::string(TRITILE_DATA_DIR) + "/hexagons/c.tritile");
    RenderStyle style;
    std::string svg = render_svg(t, style);
    CHECK(count_of(svg, "<polygon") == 12);

    // Region x spans 18 lattice units, y spans 19 rows.
    double pad = 2 * (style.stroke_width + 8.0);
    double ratio = (attr_of(svg, "width") - pad) / (attr_of(svg, "height") - pad);
    CHECK(ratio == Catch::Approx(18.0 / (19.0 * std::sqrt(3.0) / 2.0)).epsilon(1e-6));

    RenderStyle labeled;
    labeled.labels = true;
    CHECK(count_of(render_svg(t, labeled), "<text") == 11);

    // Shrinking the scale drops labels that no longer fit.
    labeled.px_per_unit = 2.0;
    CHECK(count_of(render_svg(t, labeled), "<text") == 1);

    CHECK(render_svg(t, style) == svg);
}

TEST_CASE("labels print exact sizes") {
    Tiling half(make_triangle(ExactScalar(1, 2)),
                {Tile(Orientation::Up, {0, 0}, ExactScalar(1, 2))});
    RenderStyle style;
    style.labels = true;
    style.px_per_unit = 100.0;
    std::string svg = render_svg(half, style);
    CHECK(count_of(svg, ">1/2</text>") == 1);
}
