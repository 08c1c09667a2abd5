// SPDX-License-Identifier: MIT
//
// Equilateral triangle tiles on the triangular lattice.
//
// A tile is determined by its orientation, anchor point, and side
// length.  An up tile anchored at p with size s has vertices p,
// p + (s, 0), p + (0, s); a down tile has vertices p, p + (s, 0),
// p + (s, -s).  In both cases the anchor is the leftmost vertex of the
// tile's topmost lattice row.

#ifndef TRITILE_TILE_HPP
#define TRITILE_TILE_HPP

#include "point.hpp"

#include <array>
#include <tuple>

namespace tritile {

enum class Orientation { Up, Down };

struct Tile {
    Orientation orient = Orientation::Up;
    LatticePoint anchor;
    ExactScalar size = 1;

    Tile() = default;
    Tile(Orientation o, LatticePoint p, ExactScalar s)
        : orient(o), anchor(std::move(p)), size(std::move(s)) {}

    bool operator==(const Tile& o) const {
        return orient == o.orient && anchor == o.anchor && size == o.size;
    }
};

inline std::array<LatticePoint, 3> tile_vertices(const Tile& t) {
    const auto& p = t.anchor;
    const auto& s = t.size;
    if (t.orient == Orientation::Up)
        return {p, LatticePoint{p.a + s, p.b}, LatticePoint{p.a, p.b + s}};
    return {p, LatticePoint{p.a + s, p.b}, LatticePoint{p.a + s, p.b - s}};
}

// Area in unit lattice cells (unit triangles): a tile of size s covers
// exactly s^2 of them.
inline ExactScalar tile_area_cells(const Tile& t) { return t.size * t.size; }

inline LatticePoint tile_centroid(const Tile& t) {
    auto v = tile_vertices(t);
    return {(v[0].a + v[1].a + v[2].a) / 3, (v[0].b + v[1].b + v[2].b) / 3};
}

// Rebuild a tile from its three corners, in any order.  An up tile has
// two vertices on its bottom row and one above; a down tile is the
// reverse.  Throws if the points do not form an axis-aligned
// equilateral triangle.
inline Tile tile_from_vertices(std::array<LatticePoint, 3> v) {
    // Sort by (b, a).
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (lex_ba_less(v[j], v[i])) std::swap(v[i], v[j]);
    if (v[0].b == v[1].b && v[1].b != v[2].b) {
        // Two on the bottom row: up tile anchored at the lower-left.
        ExactScalar s = v[1].a - v[0].a;
        Tile t(Orientation::Up, v[0], s);
        auto w = tile_vertices(t);
        if (w[2] == v[2] && s > 0) return t;
    } else if (v[1].b == v[2].b && v[0].b != v[1].b) {
        // Two on the top row: down tile anchored at the upper-left.
        ExactScalar s = v[2].a - v[1].a;
        Tile t(Orientation::Down, v[1], s);
        auto w = tile_vertices(t);
        if (w[2] == v[0] && s > 0) return t;
    }
    throw Error("InvalidTile", "three points do not form a lattice tile");
}

inline Tile transform_tile(const Transform& tr, const Tile& t) {
    auto v = tile_vertices(t);
    return tile_from_vertices({tr.apply(v[0]), tr.apply(v[1]), tr.apply(v[2])});
}

inline Tile translate_tile(const Tile& t, const LatticePoint& d) {
    return Tile(t.orient, t.anchor + d, t.size);
}

// Ordering used everywhere a tile list must be canonical: anchor row,
// anchor column, orientation (up before down), then size.
inline bool tile_canonical_less(const Tile& x, const Tile& y) {
    if (x.anchor.b != y.anchor.b) return x.anchor.b < y.anchor.b;
    if (x.anchor.a != y.anchor.a) return x.anchor.a < y.anchor.a;
    if (x.orient != y.orient) return x.orient == Orientation::Up;
    return x.size < y.size;
}

} // namespace tritile

#endif
