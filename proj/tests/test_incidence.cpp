// SPDX-License-Identifier: MIT
//
// Incidence graph census on four hand-checked tilings.

#include "tritile/incidence.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace tritile;

namespace {

Tiling rhombus2() {
    ConvexLatticePolygon reg({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    return Tiling(reg, {Tile(Orientation::Up, {0, 0}, 1), Tile(Orientation::Down, {0, 1}, 1)});
}

Tiling quartered_triangle() {
    return Tiling(make_triangle(2),
                  {Tile(Orientation::Up, {0, 0}, 1), Tile(Orientation::Up, {1, 0}, 1),
                   Tile(Orientation::Up, {0, 1}, 1), Tile(Orientation::Down, {0, 1}, 1)});
}

Tiling hexagon6() {
    ConvexLatticePolygon reg({{1, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}, {0, 1}});
    return Tiling(reg, {Tile(Orientation::Up, {1, 0}, 1), Tile(Orientation::Down, {0, 1}, 1),
                        Tile(Orientation::Down, {1, 1}, 1), Tile(Orientation::Up, {0, 1}, 1),
                        Tile(Orientation::Up, {1, 1}, 1), Tile(Orientation::Down, {0, 2}, 1)});
}

// Nine tiles in a 6 by 4 parallelogram: one size-4 tile and eight
// size-2 tiles, producing one interior degree-6 vertex.
Tiling parallelogram_nine() {
    ConvexLatticePolygon reg({{0, 0}, {6, 0}, {6, 4}, {0, 4}});
    return Tiling(reg, {Tile(Orientation::Up, {0, 0}, 4), Tile(Orientation::Down, {0, 4}, 2),
                        Tile(Orientation::Down, {2, 4}, 2), Tile(Orientation::Down, {2, 2}, 2),
                        Tile(Orientation::Up, {2, 2}, 2), Tile(Orientation::Up, {4, 0}, 2),
                        Tile(Orientation::Down, {4, 2}, 2), Tile(Orientation::Up, {4, 2}, 2),
                        Tile(Orientation::Down, {4, 4}, 2)});
}

} // namespace

TEST_CASE("rhombus census") {
    REQUIRE(verify(rhombus2()).valid);
    auto c = gamma_census(rhombus2());
    CHECK(c.v == 4);
    CHECK(c.e == 4);
    CHECK(c.f == 2);
    CHECK(c.whites == 2);
    CHECK(c.blacks == 2);
    CHECK(c.v2 == 4);
    CHECK(c.v3 == 0);
    CHECK(c.v6 == 0);
    CHECK(c.components == 1);
    CHECK(c.outer_len == 4);
    CHECK(c.f4_total == 2); // the bounded square and the outer face
    CHECK(c.f4_bounded == 1);
    CHECK(c.pairs == 1);
    CHECK(c.v_pi == 0);
    auto b = check_gamma(rhombus2());
    CHECK(b.pairs == 1);
    CHECK(b.lower == 1);
    CHECK(b.equality);
}

TEST_CASE("quartered triangle census") {
    REQUIRE(verify(quartered_triangle()).valid);
    auto c = gamma_census(quartered_triangle());
    CHECK(c.v == 7);
    CHECK(c.e == 9);
    CHECK(c.f == 4);
    CHECK(c.v2 == 3);
    CHECK(c.v3 == 4);
    CHECK(c.v6 == 0);
    CHECK(c.v_pi == 3);
    CHECK(c.outer_len == 6);
    CHECK(c.face_sizes == std::map<long long, long long>{{4, 3}, {6, 1}});
    CHECK(c.f4_total == 3);
    CHECK(c.f4_bounded == 3);
    CHECK(c.pairs == 3);
    auto b = check_gamma(quartered_triangle());
    CHECK(b.lower == 3);
    CHECK(b.equality);
}

TEST_CASE("hexagon census") {
    REQUIRE(verify(hexagon6()).valid);
    auto c = gamma_census(hexagon6());
    CHECK(c.v == 13);
    CHECK(c.e == 18);
    CHECK(c.f == 7);
    CHECK(c.v2 == 6);
    CHECK(c.v3 == 6);
    CHECK(c.v6 == 1);
    CHECK(c.v_pi == 0);
    CHECK(c.outer_len == 12);
    CHECK(c.face_sizes == std::map<long long, long long>{{4, 6}, {12, 1}});
    CHECK(c.f4_total == 6);
    CHECK(c.f4_bounded == 6);
    CHECK(c.pairs == 6);
    CHECK(check_gamma(hexagon6()).lower == 3);
}

TEST_CASE("parallelogram with an interior degree-6 vertex") {
    REQUIRE(verify(parallelogram_nine()).valid);
    auto c = gamma_census(parallelogram_nine());
    CHECK(c.v == 17);
    CHECK(c.e == 25);
    CHECK(c.f == 10);
    CHECK(c.whites == 9);
    CHECK(c.blacks == 8);
    CHECK(c.v2 == 4);
    CHECK(c.v3 == 12);
    CHECK(c.v6 == 1);
    CHECK(c.v_pi == 4);
    CHECK(c.outer_len == 12);
    CHECK(c.face_sizes == std::map<long long, long long>{{4, 8}, {6, 1}, {12, 1}});
    CHECK(c.f4_total == 8);
    CHECK(c.f4_bounded == 8);
    CHECK(c.pairs == 8);
    auto b = check_gamma(parallelogram_nine());
    CHECK(b.lower == 5);
    CHECK(b.equality);
}

TEST_CASE("single tile is refused") {
    Tiling t(make_triangle(1), {Tile(Orientation::Up, {0, 0}, 1)});
    CHECK_THROWS_AS(gamma_census(t), Error);
    try {
        gamma_census(t);
    } catch (const Error& e) {
        CHECK(e.code == "TooFewTiles");
    }
}
