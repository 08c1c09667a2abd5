// SPDX-License-Identifier: MIT
//
// Tiling verification, vertex classification, stats, and the cut and
// attach editing operations.

#include "tritile/tiling.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace tritile;

namespace {

ExactScalar q(long long n, long long d = 1) { return ExactScalar(n, d); }

// Pentagon with sides (2, 1, 1, 1, 2) tiled by one size-2 and three
// size-1 tiles.
Tiling pentagon_seed() {
    ConvexLatticePolygon reg({{0, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}});
    return Tiling(reg, {Tile(Orientation::Up, {0, 0}, 2), Tile(Orientation::Down, {0, 2}, 1),
                        Tile(Orientation::Up, {1, 1}, 1), Tile(Orientation::Down, {1, 1}, 1)});
}

Tiling trapezoid3() {
    ConvexLatticePolygon reg({{0, 0}, {2, 0}, {1, 1}, {0, 1}});
    return Tiling(reg, {Tile(Orientation::Up, {0, 0}, 1), Tile(Orientation::Up, {1, 0}, 1),
                        Tile(Orientation::Down, {0, 1}, 1)});
}

Tiling rhombus2() {
    ConvexLatticePolygon reg({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    return Tiling(reg, {Tile(Orientation::Up, {0, 0}, 1), Tile(Orientation::Down, {0, 1}, 1)});
}

Tiling quartered_triangle() {
    return Tiling(make_triangle(2),
                  {Tile(Orientation::Up, {0, 0}, 1), Tile(Orientation::Up, {1, 0}, 1),
                   Tile(Orientation::Up, {0, 1}, 1), Tile(Orientation::Down, {0, 1}, 1)});
}

} // namespace

TEST_CASE("valid tilings verify") {
    for (const auto& t : {pentagon_seed(), trapezoid3(), rhombus2(), quartered_triangle()}) {
        auto rep = verify(t);
        CHECK(rep.valid);
        CHECK(rep.violation.empty());
    }
}

TEST_CASE("fractional coordinates verify") {
    // Rhombus of side 3/2 split into two tiles.
    ConvexLatticePolygon reg({{0, 0}, {q(3, 2), q(0)}, {q(3, 2), q(3, 2)}, {q(0), q(3, 2)}});
    Tiling t(reg, {Tile(Orientation::Up, {0, 0}, q(3, 2)),
                   Tile(Orientation::Down, {q(0), q(3, 2)}, q(3, 2))});
    CHECK(verify(t).valid);
}

TEST_CASE("gap is reported with its first cell") {
    ConvexLatticePolygon reg({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    Tiling t(reg, {Tile(Orientation::Up, {0, 0}, 1)});
    auto rep = verify(t);
    REQUIRE_FALSE(rep.valid);
    CHECK(rep.violation == "Gap");
    REQUIRE(rep.cell);
    CHECK(rep.cell->at == LatticePoint{0, 0});
    CHECK(rep.cell->orient == Orientation::Down);
}

TEST_CASE("overlap is reported with its first cell") {
    Tiling t(make_triangle(2),
             {Tile(Orientation::Up, {0, 0}, 2), Tile(Orientation::Up, {0, 0}, 1),
              Tile(Orientation::Up, {1, 0}, 1), Tile(Orientation::Up, {0, 1}, 1),
              Tile(Orientation::Down, {0, 1}, 1)});
    auto rep = verify(t);
    REQUIRE_FALSE(rep.valid);
    CHECK(rep.violation == "Overlap");
    REQUIRE(rep.cell);
    CHECK(rep.cell->at == LatticePoint{0, 0});
    CHECK(rep.cell->orient == Orientation::Up);
}

TEST_CASE("tile outside the region is reported first") {
    Tiling t(make_triangle(2), {Tile(Orientation::Down, {0, 2}, 1)});
    auto rep = verify(t);
    REQUIRE_FALSE(rep.valid);
    CHECK(rep.violation == "TileOutsideRegion");
    REQUIRE(rep.tile_index);
    CHECK(*rep.tile_index == 0);
}

TEST_CASE("vertex classification") {
    auto cls = classify_vertices(pentagon_seed());
    CHECK(cls.at({0, 0}) == VertexClass::ThirdPi);
    CHECK(cls.at({2, 0}) == VertexClass::TwoThirdsPi);
    CHECK(cls.at({0, 2}) == VertexClass::TwoThirdsPi);
    CHECK(cls.at({1, 1}) == VertexClass::TwoPi);
    CHECK(cls.size() == 6);

    auto cls2 = classify_vertices(trapezoid3());
    CHECK(cls2.at({1, 0}) == VertexClass::Pi);
    CHECK(cls2.at({0, 0}) == VertexClass::ThirdPi);
    CHECK(cls2.at({1, 1}) == VertexClass::TwoThirdsPi);
}

TEST_CASE("stats") {
    auto st = stats(pentagon_seed());
    CHECK(st.shape == ShapeClass::Pentagon);
    CHECK(st.n == 4);
    CHECK(st.s == 2);
    CHECK(st.v_pi == 0);
    CHECK_FALSE(st.t_perfect); // two down tiles of size 1
    REQUIRE(st.sizes.size() == 4);
    CHECK(st.sizes.front() == 1);
    CHECK(st.sizes.back() == 2);

    auto st2 = stats(trapezoid3());
    CHECK(st2.shape == ShapeClass::Trapezoid);
    CHECK(st2.n == 3);
    CHECK(st2.s == 1);
    CHECK(st2.v_pi == 1);
    CHECK_FALSE(st2.t_perfect);

    CHECK(stats(rhombus2()).t_perfect);
}

TEST_CASE("up-down weight equals the directional side balance") {
    for (const auto& t : {pentagon_seed(), trapezoid3(), rhombus2(), quartered_triangle()}) {
        ExactScalar w = up_down_weight(t);
        CHECK(t.region().directional_side_balance(0) == w);
        CHECK(t.region().directional_side_balance(1) == -w);
        CHECK(t.region().directional_side_balance(2) == w);
    }
}

TEST_CASE("exposed tiles cover the sharp corners") {
    auto expo = exposed_tiles(pentagon_seed());
    REQUIRE(expo.size() == 1);
    CHECK(pentagon_seed().tiles()[expo[0]].size == 2);

    CHECK(exposed_tiles(rhombus2()).size() == 2);
    CHECK(exposed_tiles(quartered_triangle()).size() == 3);
}

TEST_CASE("cut exposed") {
    auto t = pentagon_seed();
    auto expo = exposed_tiles(t);
    REQUIRE(expo.size() == 1);
    auto cut = cut_exposed(t, expo[0]);
    CHECK(cut.region().shape() == ShapeClass::Trapezoid);
    CHECK(cut.tile_count() == 3);
    CHECK(verify(cut).valid);
    // The three remaining tiles are congruent, so the trapezoid
    // collapse statement applies to the remainder.
    auto col = check_trapezoid_collapse(cut);
    CHECK(col.hypothesis);
    CHECK(col.n == 3);

    // Cutting a non-exposed tile is refused.
    auto quart = quartered_triangle();
    int center = -1;
    for (int i = 0; i < quart.tile_count(); ++i)
        if (quart.tiles()[i].orient == Orientation::Down) center = i;
    REQUIRE(center >= 0);
    CHECK_THROWS_AS(cut_exposed(quart, center), Error);
}

TEST_CASE("attach triangle on a unique side length") {
    auto t = attach_triangle(trapezoid3(), 2);
    CHECK(t.region().shape() == ShapeClass::Pentagon);
    CHECK(t.tile_count() == 4);
    CHECK(verify(t).valid);
    auto st = stats(t);
    CHECK(st.s == 2);
    auto sides = t.region().side_lengths();
    // Congruent to the seed pentagon (2, 1, 1, 1, 2).
    std::sort(sides.begin(), sides.end());
    CHECK(sides == std::vector<ExactScalar>{1, 1, 1, 2, 2});
}

TEST_CASE("attach triangle refuses ambiguity and absence") {
    CHECK_THROWS_AS(attach_triangle(rhombus2(), 1), Error);
    CHECK_THROWS_AS(attach_triangle(rhombus2(), 1, ShapeClass::Trapezoid), Error);
    CHECK_THROWS_AS(attach_triangle(rhombus2(), 3), Error);
    try {
        attach_triangle(rhombus2(), 1);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code == "AmbiguousSide");
    }
    try {
        attach_triangle(rhombus2(), 3);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code == "NoMatchingSide");
    }
    // A fixed side index resolves the ambiguity.
    auto t = attach_at_side(rhombus2(), 0);
    CHECK(t.region().shape() == ShapeClass::Trapezoid);
    CHECK(verify(t).valid);
    CHECK_NOTHROW(check_trapezoid_collapse(t));
}

TEST_CASE("attach merges straight vertices away") {
    // Capping a short side of the seed pentagon turns both of its
    // endpoints straight, so they disappear and a trapezoid remains.
    auto t = attach_at_side(pentagon_seed(), 1);
    CHECK(t.region().shape() == ShapeClass::Trapezoid);
    CHECK(t.region().vertex_count() == 4);
    CHECK(t.tile_count() == 5);
    CHECK(verify(t).valid);
    auto sides = t.region().side_lengths();
    std::sort(sides.begin(), sides.end());
    CHECK(sides == std::vector<ExactScalar>{1, 2, 2, 3});
}

TEST_CASE("trapezoid collapse hypothesis fails off the long side") {
    ConvexLatticePolygon reg({{0, 0}, {3, 0}, {2, 1}, {0, 1}});
    Tiling t(reg, {Tile(Orientation::Up, {0, 0}, 1), Tile(Orientation::Up, {1, 0}, 1),
                   Tile(Orientation::Up, {2, 0}, 1), Tile(Orientation::Down, {0, 1}, 1),
                   Tile(Orientation::Down, {1, 1}, 1)});
    REQUIRE(verify(t).valid);
    auto col = check_trapezoid_collapse(t);
    CHECK_FALSE(col.hypothesis);
    CHECK(col.n == 5);
}

TEST_CASE("attach split side") {
    auto base = quartered_triangle();
    std::vector<Tile> strip = {Tile(Orientation::Down, {0, 0}, 1),
                               Tile(Orientation::Up, {1, -1}, 1),
                               Tile(Orientation::Down, {1, 0}, 1)};
    auto t = attach_split_side(base, strip);
    CHECK(t.region().shape() == ShapeClass::Pentagon);
    CHECK(t.tile_count() == 7);
    CHECK(verify(t).valid);

    // Leaving the middle tile out produces a gap.
    try {
        attach_split_side(base, {strip[0], strip[2]});
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code == "StripMismatch");
    }
    // A tile floating away from the region cannot form a lattice union.
    try {
        attach_split_side(base, {Tile(Orientation::Down, {5, 0}, 1)});
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK((e.code == "NonConvexResult" || e.code == "StripMismatch"));
    }
}

TEST_CASE("trapezoid collapse rejects a confined non-collapse") {
    // Valid 3-tile trapezoid: hypothesis holds, conclusion holds.
    CHECK(check_trapezoid_collapse(trapezoid3()).hypothesis);
    // Non-trapezoid input is refused.
    CHECK_THROWS_AS(check_trapezoid_collapse(rhombus2()), Error);
}

TEST_CASE("t-perfect detection") {
    CHECK(is_t_perfect(rhombus2()));
    CHECK_FALSE(is_t_perfect(quartered_triangle()));
    // Same size, opposite orientation: allowed.
    ConvexLatticePolygon reg({{0, 0}, {2, 0}, {2, 1}, {0, 1}});
    Tiling par(reg, {Tile(Orientation::Up, {0, 0}, 1), Tile(Orientation::Down, {0, 1}, 1),
                     Tile(Orientation::Up, {1, 0}, 1), Tile(Orientation::Down, {1, 1}, 1)});
    CHECK(verify(par).valid);
    CHECK_FALSE(is_t_perfect(par));
}
