// SPDX-License-Identifier: MIT
//
// Exact arithmetic, lattice points, tiles, and region geometry.

#include "tritile/polygon.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace tritile;

namespace {

ExactScalar q(long long n, long long d = 1) { return ExactScalar(n, d); }

ConvexLatticePolygon unit_up_region() {
    return ConvexLatticePolygon({{0, 0}, {1, 0}, {0, 1}});
}

} // namespace

TEST_CASE("rational parsing and printing round-trip") {
    CHECK(exact_str(parse_exact("3")) == "3");
    CHECK(exact_str(parse_exact("-14")) == "-14");
    CHECK(exact_str(parse_exact("3/2")) == "3/2");
    CHECK(exact_str(parse_exact("-10/4")) == "-5/2");
    CHECK(exact_str(parse_exact("6/3")) == "2");
    CHECK(parse_exact("10/3") == ExactScalar(10, 3));

    CHECK_THROWS_AS(parse_exact(""), Error);
    CHECK_THROWS_AS(parse_exact("3/"), Error);
    CHECK_THROWS_AS(parse_exact("/3"), Error);
    CHECK_THROWS_AS(parse_exact("3/0"), Error);
    CHECK_THROWS_AS(parse_exact("1.5"), Error);
    CHECK_THROWS_AS(parse_exact("2 "), Error);
    CHECK_THROWS_AS(parse_exact("0x2"), Error);
}

TEST_CASE("floor and ceil of rationals") {
    CHECK(exact_floor(q(7, 2)) == 3);
    CHECK(exact_ceil(q(7, 2)) == 4);
    CHECK(exact_floor(q(-7, 2)) == -4);
    CHECK(exact_ceil(q(-7, 2)) == -3);
    CHECK(exact_floor(q(4)) == 4);
    CHECK(exact_ceil(q(4)) == 4);
}

TEST_CASE("direction classification") {
    auto c = classify_direction({q(3), q(0)});
    REQUIRE(c);
    CHECK(c->first == Dir::E1);
    CHECK(c->second == 3);

    c = classify_direction({q(0), q(-5, 2)});
    REQUIRE(c);
    CHECK(c->first == Dir::NegE2);
    CHECK(c->second == q(5, 2));

    c = classify_direction({q(-4), q(4)});
    REQUIRE(c);
    CHECK(c->first == Dir::E2mE1);
    CHECK(c->second == 4);

    c = classify_direction({q(4), q(-4)});
    REQUIRE(c);
    CHECK(c->first == Dir::E1mE2);
    CHECK(c->second == 4);

    CHECK_FALSE(classify_direction({q(1), q(1)}));
    CHECK_FALSE(classify_direction({q(0), q(0)}));
    CHECK_FALSE(classify_direction({q(2), q(-1)}));
}

TEST_CASE("cross, dot, and norm agree with Cartesian geometry") {
    // All six unit directions have unit length.
    for (int i = 0; i < 6; ++i) CHECK(norm2(dir_vector(static_cast<Dir>(i))) == 1);
    // e1 x e2 is positive, e2 x e1 negative, parallel is zero.
    CHECK(cross_sign(dir_vector(Dir::E1), dir_vector(Dir::E2)) == 1);
    CHECK(cross_sign(dir_vector(Dir::E2), dir_vector(Dir::E1)) == -1);
    CHECK(cross_sign(dir_vector(Dir::E1), dir_vector(Dir::NegE1)) == 0);
    // e1 . e2 = 1/2 > 0, e1 . (e2 - e1) = -1/2 < 0, 60 vs 120 degrees.
    CHECK(dot_sign(dir_vector(Dir::E1), dir_vector(Dir::E2)) == 1);
    CHECK(dot_sign(dir_vector(Dir::E1), dir_vector(Dir::E2mE1)) == -1);
    CHECK(dot_sign(dir_vector(Dir::E1), dir_vector(Dir::E2)) == 1);
}

TEST_CASE("angular order of the six directions") {
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            bool expect = i < j;
            CHECK(angle_less(dir_vector(static_cast<Dir>(i)), dir_vector(static_cast<Dir>(j))) ==
                  expect);
        }
}

TEST_CASE("point group has twelve distinct elements with the right determinants") {
    const auto& g = point_group();
    for (int i = 0; i < 12; ++i) {
        CHECK(g[i].det() == (i < 6 ? 1 : -1));
        for (int j = i + 1; j < 12; ++j) {
            bool same = g[i].m00 == g[j].m00 && g[i].m01 == g[j].m01 && g[i].m10 == g[j].m10 &&
                        g[i].m11 == g[j].m11;
            CHECK_FALSE(same);
        }
    }
    // R60 maps e1 to e2 and flips tile orientation.
    Transform r = transform_r60();
    CHECK(r.apply({1, 0}) == LatticePoint{0, 1});
    CHECK(r.apply({0, 1}) == LatticePoint{-1, 1});
}

TEST_CASE("tile vertices match the anchor convention") {
    Tile up(Orientation::Up, {0, 0}, 1);
    auto v = tile_vertices(up);
    CHECK(v[0] == LatticePoint{0, 0});
    CHECK(v[1] == LatticePoint{1, 0});
    CHECK(v[2] == LatticePoint{0, 1});

    Tile down(Orientation::Down, {0, 0}, 2);
    v = tile_vertices(down);
    CHECK(v[0] == LatticePoint{0, 0});
    CHECK(v[1] == LatticePoint{2, 0});
    CHECK(v[2] == LatticePoint{2, -2});

    Tile frac(Orientation::Up, {q(1, 2), q(0)}, q(3, 2));
    v = tile_vertices(frac);
    CHECK(v[0] == LatticePoint{q(1, 2), q(0)});
    CHECK(v[1] == LatticePoint{q(2), q(0)});
    CHECK(v[2] == LatticePoint{q(1, 2), q(3, 2)});

    CHECK(tile_area_cells(down) == 4);
    CHECK(tile_area_cells(frac) == q(9, 4));
}

TEST_CASE("tiles rebuild from shuffled vertices") {
    Tile tiles[] = {
        Tile(Orientation::Up, {3, -2}, q(5, 3)),
        Tile(Orientation::Down, {q(-1, 2), q(7)}, q(11, 6)),
        Tile(Orientation::Up, {0, 0}, 1),
        Tile(Orientation::Down, {-4, -4}, 9),
    };
    for (const auto& t : tiles) {
        auto v = tile_vertices(t);
        std::array<LatticePoint, 3> perm = {v[2], v[0], v[1]};
        CHECK(tile_from_vertices(perm) == t);
    }
    CHECK_THROWS_AS(tile_from_vertices({LatticePoint{0, 0}, LatticePoint{1, 0},
                                        LatticePoint{2, 1}}),
                    Error);
}

TEST_CASE("tile transforms by the point group preserve shape") {
    Tile t(Orientation::Up, {2, 1}, 3);
    for (const auto& tr : point_group()) {
        Tile u = transform_tile(tr, t);
        CHECK(u.size == 3);
        // Rotation by 60 degrees flips orientation, 120 preserves it,
        // and the mirror preserves it; verify via the determinant and
        // the trace pattern rather than re-deriving each case.
        auto v = tile_vertices(u);
        auto w = tile_vertices(t);
        // The transform maps vertex sets onto each other.
        int found = 0;
        for (const auto& x : w)
            for (const auto& y : v)
                if (tr.apply(x) == y) ++found;
        CHECK(found == 3);
    }
    CHECK(transform_tile(transform_r60(), Tile(Orientation::Up, {0, 0}, 1)).orient ==
          Orientation::Down);
    CHECK(transform_tile(transform_mirror(), Tile(Orientation::Up, {0, 0}, 1)).orient ==
          Orientation::Up);
}

TEST_CASE("region validation accepts the five shapes") {
    CHECK(unit_up_region().shape() == ShapeClass::Triangle);
    CHECK(make_triangle(7).shape() == ShapeClass::Triangle);
    CHECK(make_trapezoid(3, 1).shape() == ShapeClass::Trapezoid);
    CHECK(make_parallelogram(2, 5).shape() == ShapeClass::Parallelogram);
    CHECK(make_pentagon(3, 1, 1).shape() == ShapeClass::Pentagon);
    CHECK(make_hexagon(3, 1, 1, 1).shape() == ShapeClass::Hexagon);

    ConvexLatticePolygon quad({{0, 0}, {3, 0}, {2, 1}, {0, 1}});
    CHECK(quad.shape() == ShapeClass::Trapezoid);
}

TEST_CASE("region validation rejects bad input") {
    using V = std::vector<LatticePoint>;
    // Clockwise.
    CHECK_THROWS_AS(ConvexLatticePolygon(V{{0, 0}, {0, 1}, {1, 0}}), Error);
    // Off-lattice edge.
    CHECK_THROWS_AS(ConvexLatticePolygon(V{{0, 0}, {2, -1}, {0, 1}}), Error);
    // Collinear vertex that should have been merged.
    CHECK_THROWS_AS(ConvexLatticePolygon(V{{0, 0}, {1, 0}, {2, 0}, {0, 2}}), Error);
    // Non-convex lattice hexagon is impossible; an L-shape fails.
    CHECK_THROWS_AS(
        ConvexLatticePolygon(V{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}),
        Error);
    // Too few / too many corners.
    CHECK_THROWS_AS(ConvexLatticePolygon(V{{0, 0}, {1, 0}}), Error);
}

TEST_CASE("shape classification distinguishes trapezoid from parallelogram") {
    // Sharp corners adjacent: trapezoid.
    ConvexLatticePolygon tz({{0, 0}, {3, 0}, {1, 2}, {0, 2}});
    CHECK(tz.shape() == ShapeClass::Trapezoid);
    CHECK(tz.sharp_count() == 2);
    // Sharp corners opposite: parallelogram (rhombus).
    ConvexLatticePolygon pg({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(pg.shape() == ShapeClass::Parallelogram);
    CHECK(pg.sharp_count() == 2);
}

TEST_CASE("sharp corner count is 6 - m") {
    CHECK(make_triangle(2).sharp_count() == 3);
    CHECK(make_trapezoid(4, 1).sharp_count() == 2);
    CHECK(make_parallelogram(3, 4).sharp_count() == 2);
    CHECK(make_pentagon(5, 2, 1).sharp_count() == 1);
    CHECK(make_hexagon(4, 1, 1, 1).sharp_count() == 0);
}

TEST_CASE("side lengths start from the canonical vertex") {
    // Canonical vertex of this pentagon frame is the origin.
    auto sides = make_pentagon(3, 1, 1).side_lengths();
    REQUIRE(sides.size() == 5);
    CHECK(sides[0] == 2);
    CHECK(sides[1] == 1);
    CHECK(sides[2] == 1);
    CHECK(sides[3] == 1);
    CHECK(sides[4] == 2);
}

TEST_CASE("shoelace area counts unit cells") {
    CHECK(unit_up_region().area_cells() == 1);
    CHECK(make_triangle(4).area_cells() == 16);
    CHECK(make_trapezoid(5, 2).area_cells() == 21);
    CHECK(make_parallelogram(3, 4).area_cells() == 24);
    // Pentagon area x^2 - al^2 - be^2.
    CHECK(make_pentagon(3, 1, 1).area_cells() == 7);
    CHECK(make_pentagon(21, 8, 9).area_cells() == 21 * 21 - 64 - 81);
    // Hexagon area t^2 - x^2 - y^2 - z^2.
    CHECK(make_hexagon(4, 1, 2, 1).area_cells() == 16 - 1 - 4 - 1);
}

TEST_CASE("hexagon side sums close up") {
    // For an equiangular hexagon, s1+s2 = s4+s5 and s2+s3 = s5+s6.
    auto hexes = {make_hexagon(4, 1, 1, 1), make_hexagon(7, 2, 3, 1), make_hexagon(9, 4, 2, 2)};
    for (const auto& h : hexes) {
        auto s = h.side_lengths();
        REQUIRE(s.size() == 6);
        CHECK(s[0] + s[1] == s[3] + s[4]);
        CHECK(s[1] + s[2] == s[4] + s[5]);
    }
}

TEST_CASE("directional side balance") {
    // A rhombus balances to zero on every axis.
    ConvexLatticePolygon rhomb({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    for (int axis = 0; axis < 3; ++axis) CHECK(rhomb.directional_side_balance(axis) == 0);
    // The unit up triangle has balance +1, -1, +1 on the axes e1, e2, e2-e1.
    auto up = unit_up_region();
    CHECK(up.directional_side_balance(0) == 1);
    CHECK(up.directional_side_balance(1) == -1);
    CHECK(up.directional_side_balance(2) == 1);
    // Parallelograms balance to zero as well.
    CHECK(make_parallelogram(3, 5).directional_side_balance(0) == 0);
    CHECK(make_parallelogram(3, 5).directional_side_balance(1) == 0);
    CHECK(make_parallelogram(3, 5).directional_side_balance(2) == 0);
    // Equiangular hexagons with opposite sides equal balance to zero.
    CHECK(make_hexagon(6, 2, 2, 2).directional_side_balance(0) == 0);
    CHECK(make_hexagon(6, 2, 2, 2).directional_side_balance(1) == 0);
    CHECK(make_hexagon(6, 2, 2, 2).directional_side_balance(2) == 0);
}

TEST_CASE("boundary test") {
    auto tz = make_trapezoid(3, 1);
    CHECK(tz.on_boundary({0, 0}));
    CHECK(tz.on_boundary({2, 0}));
    CHECK(tz.on_boundary({q(1, 2), q(0)}));
    CHECK(tz.on_boundary({1, 2}));       // on the slanted side
    CHECK_FALSE(tz.on_boundary({1, 1})); // interior
    CHECK_FALSE(tz.on_boundary({5, 5}));
}

TEST_CASE("shape class is invariant under the point group and scaling") {
    auto regions = {make_triangle(3), make_trapezoid(4, 1), make_parallelogram(2, 3),
                    make_pentagon(4, 1, 2), make_hexagon(5, 1, 2, 1)};
    for (const auto& r : regions) {
        for (const auto& tr : point_group()) {
            auto s = transform_polygon(tr, r);
            CHECK(s.shape() == r.shape());
            CHECK(s.area_cells() == r.area_cells());
        }
        // Scaling by 7/2 preserves the class.
        std::vector<LatticePoint> scaled;
        for (const auto& v : r.vertices()) scaled.push_back(v * q(7, 2));
        CHECK(ConvexLatticePolygon(scaled).shape() == r.shape());
    }
}
