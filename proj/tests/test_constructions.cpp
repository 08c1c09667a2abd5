// SPDX-License-Identifier: MIT
//
// The two pentagon towers, the polygon families derived from them, and
// the small hand-made witnesses.

#include "tritile/constructions.hpp"
#include "tritile/recipes.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

using namespace tritile;

namespace {

ExactScalar p(int n) { return ExactScalar(padovan(n)); }
ExactScalar q(int n) { return ExactScalar(q_seq(n)); }

std::vector<ExactScalar> side_cycle(const Tiling& t) { return t.region().side_lengths(); }

// Error code thrown by f, or "" if it does not throw.
std::string code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code;
    }
    return "";
}

// Number of distinct sizes the first tower's pentagon of index n and
// its capped variants carry.
int p_distinct(int n) { return n < 6 ? 2 : n - 3; }

} // namespace

TEST_CASE("first tower pentagons") {
    for (int n = 4; n <= 14; ++n) {
        Tiling t = spiral_pentagon(n);
        CHECK(verify(t).valid);
        auto st = stats(t);
        CHECK(st.shape == ShapeClass::Pentagon);
        CHECK(st.n == n);
        CHECK(st.s == p_distinct(n));
        CHECK(t.region().congruent_as_cycle(make_pentagon(p(n + 1), p(n - 4), p(n - 2))));
    }
    CHECK(code_of([] { spiral_pentagon(3); }) == "InvalidN");
}

TEST_CASE("triangles from the first tower") {
    for (int n = 4; n <= 12; ++n) {
        Tiling t = derived_polygon(n, 'a');
        CHECK(verify(t).valid);
        auto st = stats(t);
        CHECK(st.shape == ShapeClass::Triangle);
        CHECK(st.n == n + 2);
        CHECK(st.s == p_distinct(n));
        CHECK(t.region().congruent_as_cycle(make_triangle(p(n + 1))));
    }
}

TEST_CASE("trapezoids from the first tower") {
    for (int n = 4; n <= 12; ++n) {
        Tiling t = derived_polygon(n, 'b');
        CHECK(verify(t).valid);
        auto st = stats(t);
        CHECK(st.shape == ShapeClass::Trapezoid);
        CHECK(st.n == n + 1);
        CHECK(st.s == p_distinct(n));
        CHECK(side_cycle(t) ==
              std::vector<ExactScalar>{p(n + 1), p(n - 1), p(n - 2), p(n - 1)});
    }
}

TEST_CASE("parallelograms from the first tower") {
    for (int n = 4; n <= 12; ++n) {
        Tiling t = derived_polygon(n, 'c');
        CHECK(verify(t).valid);
        auto st = stats(t);
        CHECK(st.shape == ShapeClass::Parallelogram);
        CHECK(st.n == n + 1);
        CHECK(st.s == p_distinct(n));
        CHECK(t.region().congruent_as_cycle(make_parallelogram(p(n), p(n - 1))));
    }
}

TEST_CASE("hexagons from the first tower") {
    for (int n = 4; n <= 12; ++n) {
        Tiling t = derived_polygon(n, 'e');
        CHECK(verify(t).valid);
        auto st = stats(t);
        CHECK(st.shape == ShapeClass::Hexagon);
        CHECK(st.n == n + 3);
        CHECK(st.s == n - 2);
    }
    // At n = 6 the bottom side's half would duplicate the size-2 tiles,
    // so the strip goes on the left side instead.
    CHECK(side_cycle(derived_polygon(6, 'e')) ==
          std::vector<ExactScalar>{4, 1, 2, ExactScalar(7, 2), ExactScalar(3, 2),
                                   ExactScalar(3, 2)});
}

TEST_CASE("derived polygon argument errors") {
    CHECK(code_of([] { derived_polygon(3, 'a'); }) == "InvalidN");
    CHECK(code_of([] { derived_polygon(5, 'd'); }) == "InvalidVariant");
    CHECK(code_of([] { derived_polygon(5, 'z'); }) == "InvalidVariant");
}

TEST_CASE("second tower pentagons") {
    for (int n = 12; n <= 30; ++n) {
        Tiling t = q_pentagon(n);
        CHECK(verify(t).valid);
        auto st = stats(t);
        CHECK(st.shape == ShapeClass::Pentagon);
        CHECK(st.n == n);
        CHECK(st.s == n - 4);
        CHECK(st.t_perfect);
        CHECK(side_uniqueness_audit(t));
        CHECK(t.region().congruent_as_cycle(make_pentagon(q(n + 1), q(n - 4), q(n - 2))));
    }
    CHECK(code_of([] { q_pentagon(11); }) == "InvalidN");
}

TEST_CASE("triangles from the second tower") {
    for (int n = 13; n <= 25; ++n) {
        Tiling t = t_derived(n, 'a');
        CHECK(verify(t).valid);
        auto st = stats(t);
        CHECK(st.shape == ShapeClass::Triangle);
        CHECK(st.n == n + 2);
        CHECK(st.t_perfect);
        CHECK(t.region().congruent_as_cycle(make_triangle(q(n + 1))));
        // The caps repeat existing sizes except at 13 and 15, where one
        // cap length is not yet among the tile sizes.
        int expect_s = (n == 13 || n == 15) ? st.n - 5 : st.n - 6;
        CHECK(st.s == expect_s);
    }
    CHECK(code_of([] { t_derived(12, 'a'); }) == "InvalidN");
}

TEST_CASE("trapezoids from the second tower") {
    for (int n = 12; n <= 25; ++n) {
        Tiling t = t_derived(n, 'b');
        CHECK(verify(t).valid);
        auto st = stats(t);
        CHECK(st.shape == ShapeClass::Trapezoid);
        CHECK(st.n == n + 1);
        CHECK(st.t_perfect);
        CHECK(side_cycle(t) == std::vector<ExactScalar>{q(n), q(n - 4), q(n), q(n + 1)});
        int expect_s = (n == 13) ? st.n - 4 : st.n - 5;
        CHECK(st.s == expect_s);
    }
    CHECK(code_of([] { t_derived(11, 'b'); }) == "InvalidN");
}

TEST_CASE("parallelograms from the second tower") {
    for (int n = 12; n <= 25; ++n) {
        Tiling t = t_derived(n, 'c');
        CHECK(verify(t).valid);
        auto st = stats(t);
        CHECK(st.shape == ShapeClass::Parallelogram);
        CHECK(st.n == n + 1);
        CHECK(st.t_perfect);
        CHECK(t.region().congruent_as_cycle(make_parallelogram(q(n), q(n - 1))));
        int expect_s = (n == 14) ? st.n - 4 : st.n - 5;
        CHECK(st.s == expect_s);
    }
}

TEST_CASE("hexagons from the second tower") {
    for (int n = 12; n <= 25; ++n) {
        if (n == 16) continue;
        Tiling t = t_derived(n, 'e');
        CHECK(verify(t).valid);
        auto st = stats(t);
        CHECK(st.shape == ShapeClass::Hexagon);
        CHECK(st.n == n + 5);
        CHECK(st.t_perfect);
        CHECK(st.s == st.n - 6);
    }
    // At n = 16 a third of the side step is 3, already used by a down
    // tile, so no strip keeps the size-orientation pairs unique.
    CHECK(code_of([] { t_derived(16, 'e'); }) == "InvalidN");
    // The five strip tiles need thirds, so sizes may be non-integral.
    auto st12 = stats(t_derived(12, 'e'));
    CHECK(std::count(st12.sizes.begin(), st12.sizes.end(), ExactScalar(10, 3)) == 1);
}

TEST_CASE("smallest witnesses") {
    struct Row {
        ShapeClass shape;
        int n;
    };
    const Row rows[] = {{ShapeClass::Triangle, 1},      {ShapeClass::Triangle, 4},
                        {ShapeClass::Trapezoid, 3},     {ShapeClass::Parallelogram, 2},
                        {ShapeClass::Parallelogram, 4}, {ShapeClass::Pentagon, 4},
                        {ShapeClass::Hexagon, 6}};
    for (const auto& r : rows) {
        Tiling t = canonical_small(r.shape, r.n);
        CHECK(verify(t).valid);
        auto st = stats(t);
        CHECK(st.shape == r.shape);
        CHECK(st.n == r.n);
    }
    CHECK(stats(canonical_small(ShapeClass::Parallelogram, 2)).t_perfect);
    CHECK(code_of([] { canonical_small(ShapeClass::Triangle, 2); }) == "NoCanonicalWitness");
}

TEST_CASE("attachment recipes on the cut seed") {
    // Cutting the exposed 12-tile off the second tower's base yields
    // the gallery hexagon the small recipes start from.
    Tiling base = cut_exposed(q12_seed(), 0);
    REQUIRE(base.region().congruent_as_cycle(make_hexagon(28, 8, 9, 12)));
    REQUIRE(stats(base).t_perfect);

    struct Expect {
        ShapeClass shape;
        int n;
        int s;
    };
    const Expect rows[] = {{ShapeClass::Triangle, 15, 10},
                           {ShapeClass::Triangle, 17, 12},
                           {ShapeClass::Trapezoid, 14, 10},
                           {ShapeClass::Trapezoid, 16, 12},
                           {ShapeClass::Parallelogram, 15, 11}};
    for (const auto& r : rows) {
        const AttachRecipe& recipe = recipe_for(r.shape, r.n);
        REQUIRE(recipe.base == 'c');
        Tiling t = recipe_build(base, recipe);
        CHECK(verify(t).valid);
        auto st = stats(t);
        CHECK(st.shape == r.shape);
        CHECK(st.n == r.n);
        CHECK(st.s == r.s);
        CHECK(st.t_perfect);
    }
    CHECK(code_of([] { recipe_for(ShapeClass::Triangle, 16); }) == "NoRecipe");
    CHECK(attach_recipes().size() == 31);
}

TEST_CASE("side placement audit") {
    CHECK(side_uniqueness_audit(q12_seed()));
    CHECK(side_uniqueness_audit(p4_seed()));
    CHECK(side_uniqueness_audit(canonical_small(ShapeClass::Triangle, 1)));

    // A hexagon with two sides of length two and a single two-tile that
    // spans only one of them: the audit must reject it.
    ConvexLatticePolygon hex({{2, 0}, {3, 0}, {3, 1}, {1, 3}, {0, 3}, {0, 2}});
    Tiling t(hex, {Tile(Orientation::Up, {1, 1}, 2), Tile(Orientation::Up, {2, 0}, 1),
                   Tile(Orientation::Up, {0, 2}, 1), Tile(Orientation::Down, {1, 1}, 1),
                   Tile(Orientation::Down, {2, 1}, 1), Tile(Orientation::Down, {0, 2}, 1),
                   Tile(Orientation::Down, {0, 3}, 1)});
    REQUIRE(verify(t).valid);
    CHECK_FALSE(side_uniqueness_audit(t));
}
