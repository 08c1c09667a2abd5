// SPDX-License-Identifier: MIT
//
// Convex lattice polygons: the regions that get tiled.
//
// A valid region is a convex polygon whose edges all follow lattice
// directions; its interior angles are then 60 or 120 degrees, which
// forces 3 to 6 vertices.  A polygon with m vertices has exactly 6 - m
// corners of 60 degrees, and the placement of those sharp corners
// decides the shape class:
//
//   m = 3  equilateral triangle
//   m = 4  two sharp corners; adjacent -> trapezoid, opposite -> parallelogram
//   m = 5  pentagon (one sharp corner)
//   m = 6  equiangular hexagon (no sharp corner)

#ifndef TRITILE_POLYGON_HPP
#define TRITILE_POLYGON_HPP

#include "tile.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace tritile {

enum class ShapeClass { Triangle, Trapezoid, Parallelogram, Pentagon, Hexagon };

inline const char* shape_name(ShapeClass s) {
    switch (s) {
        case ShapeClass::Triangle: return "triangle";
        case ShapeClass::Trapezoid: return "trapezoid";
        case ShapeClass::Parallelogram: return "parallelogram";
        case ShapeClass::Pentagon: return "pentagon";
        case ShapeClass::Hexagon: return "hexagon";
    }
    return "?";
}

class ConvexLatticePolygon {
  public:
    // Vertices in counterclockwise order.  Validation rejects edges off
    // the lattice directions, non-convex corners, and collinear
    // vertices (a straight vertex must be merged away by the caller).
    explicit ConvexLatticePolygon(std::vector<LatticePoint> vertices)
        : verts_(std::move(vertices)) {
        validate();
    }

    const std::vector<LatticePoint>& vertices() const { return verts_; }
    int vertex_count() const { return static_cast<int>(verts_.size()); }

    const LatticePoint& vertex(int i) const { return verts_[index(i)]; }

    // Direction and length of side i, which runs vertex(i) -> vertex(i+1).
    Dir side_dir(int i) const { return dirs_[index(i)]; }
    const ExactScalar& side_len(int i) const { return lens_[index(i)]; }

    // True when the interior angle at vertex i is 60 degrees.
    bool sharp_at(int i) const { return sharp_[index(i)]; }

    int sharp_count() const {
        int n = 0;
        for (bool s : sharp_) n += s ? 1 : 0;
        return n;
    }

    ShapeClass shape() const {
        int m = vertex_count();
        if (m == 3) return ShapeClass::Triangle;
        if (m == 5) return ShapeClass::Pentagon;
        if (m == 6) return ShapeClass::Hexagon;
        // m == 4: the two sharp corners are either endpoints of one side
        // (trapezoid) or opposite (parallelogram).
        for (int i = 0; i < 4; ++i)
            if (sharp_[i] && sharp_[(i + 1) % 4]) return ShapeClass::Trapezoid;
        return ShapeClass::Parallelogram;
    }

    // Index of the vertex least in (b, a) order; side lists and
    // serialized forms start here.
    int canonical_start() const {
        int best = 0;
        for (int i = 1; i < vertex_count(); ++i)
            if (lex_ba_less(verts_[i], verts_[best])) best = i;
        return best;
    }

    // Side lengths counterclockwise starting from the canonical vertex.
    std::vector<ExactScalar> side_lengths() const {
        std::vector<ExactScalar> out;
        int m = vertex_count(), s = canonical_start();
        out.reserve(m);
        for (int i = 0; i < m; ++i) out.push_back(lens_[(s + i) % m]);
        return out;
    }

    // Area in unit lattice cells.  The shoelace sum of lattice
    // coordinates counts exactly the number of unit triangles enclosed.
    ExactScalar area_cells() const {
        ExactScalar acc = 0;
        int m = vertex_count();
        for (int i = 0; i < m; ++i) {
            const auto& p = verts_[i];
            const auto& q = verts_[(i + 1) % m];
            acc += p.a * q.b - q.a * p.b;
        }
        return acc;
    }

    // Signed sum of edge lengths along one of the three lattice axes
    // (0: e1, 1: e2, 2: e2-e1); edges running against the axis count
    // negatively and edges off the axis not at all.  Interior edges of
    // a tiling cancel in this sum, which makes it additive over tiles.
    ExactScalar directional_side_balance(int axis) const {
        Dir pos = static_cast<Dir>(axis);
        Dir neg = dir_opposite(pos);
        ExactScalar acc = 0;
        int m = vertex_count();
        for (int i = 0; i < m; ++i) {
            if (dirs_[i] == pos) acc += lens_[i];
            else if (dirs_[i] == neg) acc -= lens_[i];
        }
        return acc;
    }

    // True if p lies on the boundary (vertices included).
    bool on_boundary(const LatticePoint& p) const {
        int m = vertex_count();
        for (int i = 0; i < m; ++i) {
            const auto& v = verts_[i];
            LatticePoint d = p - v;
            if (d.a == 0 && d.b == 0) return true;
            auto cls = classify_direction(d);
            if (cls && cls->first == dirs_[i] && cls->second <= lens_[i]) return true;
        }
        return false;
    }

    // Index of the region vertex equal to p, or -1.
    int vertex_index_of(const LatticePoint& p) const {
        for (int i = 0; i < vertex_count(); ++i)
            if (verts_[i] == p) return i;
        return -1;
    }

    bool congruent_as_cycle(const ConvexLatticePolygon& o) const {
        if (vertex_count() != o.vertex_count()) return false;
        int m = vertex_count();
        for (int shift = 0; shift < m; ++shift) {
            bool ok = true;
            for (int i = 0; i < m && ok; ++i)
                ok = verts_[(i + shift) % m] == o.verts_[i];
            if (ok) return true;
        }
        return false;
    }

  private:
    int index(int i) const {
        int m = vertex_count();
        i %= m;
        return i < 0 ? i + m : i;
    }

    void validate() {
        int m = vertex_count();
        if (m < 3 || m > 6)
            throw Error("InvalidRegion", "region must have 3 to 6 vertices, got " +
                                             std::to_string(m));
        dirs_.resize(m);
        lens_.resize(m);
        sharp_.assign(m, false);
        for (int i = 0; i < m; ++i) {
            LatticePoint d = verts_[(i + 1) % m] - verts_[i];
            auto cls = classify_direction(d);
            if (!cls)
                throw Error("InvalidRegion",
                            "side " + std::to_string(i) + " does not follow a lattice direction");
            dirs_[i] = cls->first;
            lens_[i] = cls->second;
        }
        for (int i = 0; i < m; ++i) {
            // Counterclockwise turn of 60 degrees (interior 120) or 120
            // degrees (interior 60) at every vertex; anything else is
            // non-convex or collinear.
            int from = static_cast<int>(dirs_[(i + m - 1) % m]);
            int to = static_cast<int>(dirs_[i]);
            int turn = (to - from + 6) % 6;
            if (turn == 1) sharp_[i] = false;
            else if (turn == 2) sharp_[i] = true;
            else
                throw Error("InvalidRegion", "vertex " + std::to_string(i) +
                                                 " is not a convex lattice corner");
        }
        // With every turn 60 or 120 and the total necessarily 360, the
        // polygon closes and is simple; check closure arithmetic anyway
        // to catch inconsistent input early.
        ExactScalar sa = 0, sb = 0;
        int total = 0;
        for (int i = 0; i < m; ++i) {
            LatticePoint u = dir_vector(dirs_[i]);
            sa += u.a * lens_[i];
            sb += u.b * lens_[i];
            total += sharp_[i] ? 2 : 1;
        }
        if (sa != 0 || sb != 0 || total != 6)
            throw Error("InvalidRegion", "sides do not close up");
    }

    std::vector<LatticePoint> verts_;
    std::vector<Dir> dirs_;
    std::vector<ExactScalar> lens_;
    std::vector<bool> sharp_;
};

// Convenience builders for the five shape families, each in a fixed
// frame with the canonical vertex at the origin.

inline ConvexLatticePolygon make_triangle(const ExactScalar& t) {
    return ConvexLatticePolygon({{0, 0}, {t, 0}, {ExactScalar(0), t}});
}

// Trapezoid with parallel sides l (bottom) and c, 0 < c < l.
inline ConvexLatticePolygon make_trapezoid(const ExactScalar& l, const ExactScalar& c) {
    return ConvexLatticePolygon({{0, 0}, {l, 0}, {c, l - c}, {ExactScalar(0), l - c}});
}

inline ConvexLatticePolygon make_parallelogram(const ExactScalar& a, const ExactScalar& b) {
    return ConvexLatticePolygon({{0, 0}, {a, 0}, {a, b}, {ExactScalar(0), b}});
}

// Pentagon: triangle of side x with corners of sizes al and be cut off
// at its two non-origin vertices, leaving the sharp corner at the
// origin.  Side list counterclockwise from the origin:
// (x - al, al, x - al - be, be, x - be).
inline ConvexLatticePolygon make_pentagon(const ExactScalar& x, const ExactScalar& al,
                                          const ExactScalar& be) {
    return ConvexLatticePolygon(
        {{0, 0}, {x - al, 0}, {x - al, al}, {be, x - be}, {ExactScalar(0), x - be}});
}

// Hexagon: triangle of side t with corners of sizes x, y, z cut off;
// side list (t - x - z, x, t - x - y, y, t - y - z, z) counterclockwise
// from the vertex (z, 0).
inline ConvexLatticePolygon make_hexagon(const ExactScalar& t, const ExactScalar& x,
                                         const ExactScalar& y, const ExactScalar& z) {
    return ConvexLatticePolygon({{z, 0},
                                 {t - x, 0},
                                 {t - x, x},
                                 {y, t - y},
                                 {ExactScalar(0), t - y},
                                 {ExactScalar(0), z}});
}

// Apply a point-group element to a polygon; reflections reverse the
// vertex list to keep it counterclockwise.  The result starts at its
// canonical vertex.
inline ConvexLatticePolygon transform_polygon(const Transform& tr,
                                              const ConvexLatticePolygon& poly) {
    std::vector<LatticePoint> vs;
    vs.reserve(poly.vertex_count());
    for (const auto& v : poly.vertices()) vs.push_back(tr.apply(v));
    if (tr.det() < 0) std::reverse(vs.begin(), vs.end());
    ConvexLatticePolygon tmp(vs);
    int s = tmp.canonical_start();
    std::vector<LatticePoint> rot;
    rot.reserve(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        rot.push_back(tmp.vertices()[(s + i) % vs.size()]);
    return ConvexLatticePolygon(rot);
}

inline ConvexLatticePolygon translate_polygon(const ConvexLatticePolygon& poly,
                                              const LatticePoint& d) {
    std::vector<LatticePoint> vs;
    vs.reserve(poly.vertex_count());
    for (const auto& v : poly.vertices()) vs.push_back(v + d);
    return ConvexLatticePolygon(vs);
}

inline ConvexLatticePolygon scale_polygon(const ConvexLatticePolygon& poly,
                                          const ExactScalar& k) {
    if (k <= 0) throw Error("InvalidScale", "scale factor must be positive");
    std::vector<LatticePoint> vs;
    vs.reserve(poly.vertex_count());
    for (const auto& v : poly.vertices()) vs.push_back(v * k);
    return ConvexLatticePolygon(vs);
}

} // namespace tritile

#endif
