// SPDX-License-Identifier: MIT
//
// Pentagon towers and the polygon families obtained from them.  Each
// tower starts from a hand-checked pentagon tiling and grows by capping
// the bottom side with one tile whose size equals that side, which
// yields the next pentagon of the same kind after rotating the frame
// back to canonical position.  Capping or strip-splitting further
// sides of a tower member turns it into a triangle, trapezoid,
// parallelogram, or hexagon tiling.

#pragma once

#include "tritile/sequences.hpp"
#include "tritile/tiling.hpp"

#include <string>
#include <vector>

namespace tritile {

// Pentagon with sides (2, 1, 1, 1, 2) tiled by four tiles; the base of
// the first tower.
inline Tiling p4_seed() {
    ConvexLatticePolygon reg({{0, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}});
    return Tiling(reg, {Tile(Orientation::Up, {0, 0}, 2), Tile(Orientation::Down, {0, 2}, 1),
                        Tile(Orientation::Up, {1, 1}, 1), Tile(Orientation::Down, {1, 1}, 1)});
}

// Pentagon with sides (20, 8, 11, 9, 19) tiled by twelve tiles using
// every size-orientation combination at most once; the base of the
// second tower.  This is the unique such tiling in which the lone
// 11-tile and the lone 9-tile each have a full side on the region side
// of their own length, a property every tower member inherits and the
// later cap steps depend on.
inline Tiling q12_seed() {
    ConvexLatticePolygon reg({{0, 0}, {20, 0}, {20, 8}, {9, 19}, {0, 19}});
    return Tiling(reg, {Tile(Orientation::Up, {0, 0}, 12), Tile(Orientation::Up, {12, 0}, 8),
                        Tile(Orientation::Up, {7, 5}, 5), Tile(Orientation::Down, {7, 5}, 5),
                        Tile(Orientation::Up, {9, 8}, 11), Tile(Orientation::Down, {9, 8}, 3),
                        Tile(Orientation::Down, {12, 8}, 8), Tile(Orientation::Up, {7, 10}, 2),
                        Tile(Orientation::Down, {7, 10}, 2), Tile(Orientation::Up, {0, 12}, 7),
                        Tile(Orientation::Down, {0, 12}, 7), Tile(Orientation::Down, {0, 19}, 9)});
}

// For every region side whose length occurs exactly once among the
// tile sizes, the tile of that size has a full side on that region
// side.  The towers keep this at every level; it is what lets caps of
// matching size glue on later without repeating a size-orientation
// combination.
inline bool side_uniqueness_audit(const Tiling& t) {
    const auto& reg = t.region();
    for (int i = 0; i < reg.vertex_count(); ++i) {
        ExactScalar len = reg.side_len(i);
        const Tile* only = nullptr;
        int count = 0;
        for (const auto& tl : t.tiles())
            if (tl.size == len) {
                ++count;
                only = &tl;
            }
        if (count != 1) continue;
        LatticePoint p = reg.vertex(i), q = reg.vertex(i + 1);
        int hit = 0;
        for (const auto& v : tile_vertices(*only))
            if (v == p || v == q) ++hit;
        if (hit != 2) return false;
    }
    return true;
}

namespace detail {

inline int side_at(const ConvexLatticePolygon& reg, const LatticePoint& start, Dir d) {
    for (int i = 0; i < reg.vertex_count(); ++i)
        if (reg.vertex(i) == start && reg.side_dir(i) == d) return i;
    throw Error("InvariantViolation", "expected region side not found");
}

inline std::vector<LatticePoint> canonical_cycle(const ConvexLatticePolygon& reg) {
    int k = reg.canonical_start();
    std::vector<LatticePoint> out;
    out.reserve(reg.vertex_count());
    for (int i = 0; i < reg.vertex_count(); ++i) out.push_back(reg.vertex(k + i));
    return out;
}

inline void require_frame(const Tiling& t, const ConvexLatticePolygon& expect) {
    if (canonical_cycle(t.region()) != canonical_cycle(expect))
        throw Error("InvariantViolation", "tower frame mismatch");
}

// One tower step: cap the bottom side from the origin, translate the
// new sharp corner back to the origin, and rotate by -60 degrees so
// the two sides at the sharp corner become the bottom and right sides
// of the next canonical frame.
inline Tiling advance_spiral(const Tiling& t) {
    const auto& reg = t.region();
    int side = side_at(reg, {0, 0}, Dir::E1);
    ExactScalar len = reg.side_len(side);
    Tiling capped = attach_at_side(t, side);
    Tiling moved = translate_tiling(capped, {-len, len});
    return transform_tiling(moved, Transform{1, 1, -1, 0});
}

// Three tiles splitting a side of even half into a flat strip: caps on
// the two halves plus the middle tile between their apexes.
inline std::vector<Tile> strip_tiles(const LatticePoint& p, Dir d, const ExactScalar& len) {
    ExactScalar h = len / 2;
    LatticePoint step = dir_vector(d) * h;
    LatticePoint mid = p + step;
    Tile t1 = external_tile(p, d, h);
    Tile t3 = external_tile(mid, d, h);
    auto apex = [](const Tile& t, const LatticePoint& u, const LatticePoint& v) {
        for (const auto& w : tile_vertices(t))
            if (!(w == u) && !(w == v)) return w;
        throw Error("InvariantViolation", "degenerate cap");
    };
    Tile t2 = tile_from_vertices({mid, apex(t1, p, mid), apex(t3, mid, mid + step)});
    return {t1, t2, t3};
}

inline void require_variant(char variant) {
    if (variant != 'a' && variant != 'b' && variant != 'c' && variant != 'e')
        throw Error("InvalidVariant", std::string("no variant '") + variant + "'");
}

} // namespace detail

// Pentagon tower member with sides (p(n), p(n-4), p(n-3), p(n-2),
// p(n-1)) in the first sequence, tiled by n tiles.
inline Tiling spiral_pentagon(int n) {
    if (n < 4) throw Error("InvalidN", "tower starts at 4");
    Tiling t = p4_seed();
    for (int k = 4; k < n; ++k) t = detail::advance_spiral(t);
    detail::require_frame(t, make_pentagon(ExactScalar(padovan(n + 1)),
                                           ExactScalar(padovan(n - 4)),
                                           ExactScalar(padovan(n - 2))));
    return t;
}

// Pentagon tower member with sides (q(n), q(n-4), q(n-3), q(n-2),
// q(n-1)) in the second sequence, tiled by n tiles using every
// size-orientation combination at most once.
inline Tiling q_pentagon(int n) {
    if (n < 12) throw Error("InvalidN", "tower starts at 12");
    Tiling t = q12_seed();
    for (int k = 12; k < n; ++k) t = detail::advance_spiral(t);
    detail::require_frame(t, make_pentagon(ExactScalar(q_seq(n + 1)),
                                           ExactScalar(q_seq(n - 4)),
                                           ExactScalar(q_seq(n - 2))));
    return t;
}

// Triangle (a), trapezoid (b), parallelogram (c), or hexagon (e)
// obtained from the first tower's pentagon of index n.
inline Tiling derived_polygon(int n, char variant) {
    detail::require_variant(variant);
    if (n < 4) throw Error("InvalidN", "derived polygons start at 4");
    Tiling t = spiral_pentagon(n);
    ExactScalar x(padovan(n)), al(padovan(n - 4)), be(padovan(n - 2)), y(padovan(n - 1));
    switch (variant) {
    case 'a': {
        Tiling c1 = attach_at_side(t, detail::side_at(t.region(), {x, 0}, Dir::E2));
        return attach_at_side(c1, detail::side_at(c1.region(), {be, y}, Dir::NegE1));
    }
    case 'b':
        return attach_at_side(t, detail::side_at(t.region(), {x, 0}, Dir::E2));
    case 'c':
        return attach_at_side(t, detail::side_at(t.region(), {x, al}, Dir::E2mE1));
    default:
        // The bottom strip's half size collides with an existing size
        // only at n = 6, where the left side serves instead.
        if (n == 6) return attach_split_side(t, detail::strip_tiles({0, y}, Dir::NegE2, y));
        return attach_split_side(t, detail::strip_tiles({0, 0}, Dir::E1, x));
    }
}

// The same four shapes from the second tower, keeping every
// size-orientation combination unique.
inline Tiling t_derived(int n, char variant) {
    detail::require_variant(variant);
    if (n < 12) throw Error("InvalidN", "derived polygons start at 12");
    if (variant == 'a' && n < 13)
        throw Error("InvalidN", "the right cap would repeat an up 8-tile");
    if (variant == 'e' && n == 16)
        throw Error("InvalidN", "the strip middle size 3 would repeat a down 3-tile");
    Tiling t = q_pentagon(n);
    ExactScalar x(q_seq(n)), al(q_seq(n - 4)), be(q_seq(n - 2)), y(q_seq(n - 1));
    switch (variant) {
    case 'a': {
        Tiling c1 = attach_at_side(t, detail::side_at(t.region(), {x, 0}, Dir::E2));
        return attach_at_side(c1, detail::side_at(c1.region(), {be, y}, Dir::NegE1));
    }
    case 'b':
        return attach_at_side(t, detail::side_at(t.region(), {be, y}, Dir::NegE1));
    case 'c':
        return attach_at_side(t, detail::side_at(t.region(), {x, al}, Dir::E2mE1));
    default: {
        ExactScalar a = (y - be) / 3, b = be + a, c = y - a;
        std::vector<Tile> tiles = {Tile(Orientation::Down, {-c, c}, c),
                                   Tile(Orientation::Up, {-c, c}, c),
                                   Tile(Orientation::Down, {-a, y}, a),
                                   Tile(Orientation::Up, {-a, y}, b),
                                   Tile(Orientation::Down, {-a - b, y + b}, b)};
        return attach_split_side(t, tiles);
    }
    }
}

// The smallest tiling of each shape at its minimal interesting tile
// count: a direct witness for the left edge of the bound tables.
inline Tiling canonical_small(ShapeClass shape, int n) {
    auto up = [](ExactScalar a, ExactScalar b, ExactScalar s) {
        return Tile(Orientation::Up, {a, b}, s);
    };
    auto dn = [](ExactScalar a, ExactScalar b, ExactScalar s) {
        return Tile(Orientation::Down, {a, b}, s);
    };
    if (shape == ShapeClass::Triangle && n == 1)
        return Tiling(make_triangle(1), {up(0, 0, 1)});
    if (shape == ShapeClass::Triangle && n == 4)
        return Tiling(make_triangle(2), {up(0, 0, 1), up(1, 0, 1), up(0, 1, 1), dn(0, 1, 1)});
    if (shape == ShapeClass::Trapezoid && n == 3)
        return Tiling(make_trapezoid(2, 1), {up(0, 0, 1), up(1, 0, 1), dn(0, 1, 1)});
    if (shape == ShapeClass::Parallelogram && n == 2)
        return Tiling(make_parallelogram(1, 1), {up(0, 0, 1), dn(0, 1, 1)});
    if (shape == ShapeClass::Parallelogram && n == 4)
        return Tiling(make_parallelogram(2, 1),
                      {up(0, 0, 1), up(1, 0, 1), dn(0, 1, 1), dn(1, 1, 1)});
    if (shape == ShapeClass::Pentagon && n == 4) return p4_seed();
    if (shape == ShapeClass::Hexagon && n == 6)
        return Tiling(make_hexagon(3, 1, 1, 1),
                      {up(1, 0, 1), dn(0, 1, 1), dn(1, 1, 1), up(0, 1, 1), up(1, 1, 1), dn(0, 2, 1)});
    throw Error("NoCanonicalWitness",
                std::string(shape_name(shape)) + " with " + std::to_string(n) + " tiles");
}

} // namespace tritile
