// SPDX-License-Identifier: MIT
//
// Tilings of convex lattice regions by equilateral triangle tiles, and
// the operations that create, check, and edit them.
//
// Verification works on the unit-cell decomposition: after scaling away
// all denominators, region and tiles decompose into rows of upward and
// downward unit cells, and a tiling is valid exactly when the tile
// cells partition the region cells.  The sweep below checks that row by
// row in time linear in the total scaled tile size, and reports the
// first offending cell (in row, column, up-before-down order) or the
// first tile that leaves the region.

#ifndef TRITILE_TILING_HPP
#define TRITILE_TILING_HPP

#include "polygon.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tritile {

enum class VertexClass { ThirdPi, TwoThirdsPi, Pi, TwoPi };

// A unit cell after scaling: the up cell at (a, r) has corners (a, r),
// (a+1, r), (a, r+1); the down cell at (a, r) has corners (a+1, r),
// (a, r+1), (a+1, r+1).
struct CellRef {
    LatticePoint at;
    Orientation orient = Orientation::Up;
};

struct VerificationReport {
    bool valid = true;
    std::string violation; // "Overlap", "Gap", or "TileOutsideRegion"
    std::optional<CellRef> cell;
    std::optional<int> tile_index;
    std::string detail;
};

struct TilingStats {
    ShapeClass shape = ShapeClass::Triangle;
    int n = 0;    // number of tiles
    int s = 0;    // number of distinct sizes
    int v_pi = 0; // straight vertices on the region boundary
    bool t_perfect = false;
    std::vector<ExactScalar> sizes; // sorted multiset
};

class Tiling {
  public:
    Tiling(ConvexLatticePolygon region, std::vector<Tile> tiles)
        : region_(std::move(region)), tiles_(std::move(tiles)) {
        for (const auto& t : tiles_)
            if (t.size <= 0) throw Error("InvalidTile", "tile size must be positive");
        std::sort(tiles_.begin(), tiles_.end(), tile_canonical_less);
    }

    const ConvexLatticePolygon& region() const { return region_; }
    const std::vector<Tile>& tiles() const { return tiles_; }
    int tile_count() const { return static_cast<int>(tiles_.size()); }

  private:
    ConvexLatticePolygon region_;
    std::vector<Tile> tiles_;
};

namespace detail {

// Least common multiple of all coordinate and size denominators, i.e.
// the scale factor that makes the whole tiling integral.
inline Int common_scale(const Tiling& t) {
    Int l = 1;
    auto fold = [&](const ExactScalar& x) { l = exact_lcm(l, exact_den(x)); };
    for (const auto& v : t.region().vertices()) {
        fold(v.a);
        fold(v.b);
    }
    for (const auto& tl : t.tiles()) {
        fold(tl.anchor.a);
        fold(tl.anchor.b);
        fold(tl.size);
    }
    return l;
}

struct ScaledRegion {
    // The region is the solution set of am <= a <= ap, bm <= b <= bp,
    // sm <= a+b <= sp; every convex lattice polygon has this form.
    std::int64_t am = 0, ap = 0, bm = 0, bp = 0, sm = 0, sp = 0;

    // Up cells of row r occupy columns [lo, hi); empty when lo >= hi.
    std::pair<std::int64_t, std::int64_t> up_cols(std::int64_t r) const {
        if (r < bm || r >= bp) return {0, 0};
        return {std::max(am, sm - r), std::min(ap, sp - r)};
    }
    std::pair<std::int64_t, std::int64_t> down_cols(std::int64_t r) const {
        if (r < bm || r >= bp) return {0, 0};
        return {std::max(am, sm - r - 1), std::min(ap, sp - r - 1)};
    }
};

inline ScaledRegion scale_region(const ConvexLatticePolygon& poly, const Int& l) {
    ScaledRegion sr;
    bool first = true;
    for (const auto& v : poly.vertices()) {
        std::int64_t a = to_i64(exact_num(v.a * l));
        std::int64_t b = to_i64(exact_num(v.b * l));
        if (first) {
            sr.am = sr.ap = a;
            sr.bm = sr.bp = b;
            sr.sm = sr.sp = a + b;
            first = false;
        } else {
            sr.am = std::min(sr.am, a);
            sr.ap = std::max(sr.ap, a);
            sr.bm = std::min(sr.bm, b);
            sr.bp = std::max(sr.bp, b);
            sr.sm = std::min(sr.sm, a + b);
            sr.sp = std::max(sr.sp, a + b);
        }
    }
    return sr;
}

struct ScaledTile {
    std::int64_t x = 0, y = 0, s = 0;
    bool up = true;
};

inline ScaledTile scale_tile(const Tile& t, const Int& l) {
    return {to_i64(exact_num(t.anchor.a * l)), to_i64(exact_num(t.anchor.b * l)),
            to_i64(exact_num(t.size * l)), t.orient == Orientation::Up};
}

// Column interval a tile covers in row r, for each cell parity.
// Up(x, y, s) spans rows [y, y+s): up cells [x, x+s-j), down cells
// [x, x+s-1-j) with j = r - y.  Down(x, y, s) spans rows [y-s, y):
// down cells [x+j, x+s), up cells [x+j+1, x+s) with j = y-1-r.
inline std::pair<std::int64_t, std::int64_t> tile_cols(const ScaledTile& t, std::int64_t r,
                                                       bool up_cells) {
    if (t.up) {
        std::int64_t j = r - t.y;
        return up_cells ? std::make_pair(t.x, t.x + t.s - j)
                        : std::make_pair(t.x, t.x + t.s - 1 - j);
    }
    std::int64_t j = t.y - 1 - r;
    return up_cells ? std::make_pair(t.x + j + 1, t.x + t.s) : std::make_pair(t.x + j, t.x + t.s);
}

inline std::pair<std::int64_t, std::int64_t> tile_rows(const ScaledTile& t) {
    return t.up ? std::make_pair(t.y, t.y + t.s) : std::make_pair(t.y - t.s, t.y);
}

} // namespace detail

inline VerificationReport verify(const Tiling& t) {
    using namespace detail;
    Int l = common_scale(t);
    ScaledRegion reg = scale_region(t.region(), l);
    std::vector<ScaledTile> tiles;
    tiles.reserve(t.tiles().size());
    for (const auto& tl : t.tiles()) tiles.push_back(scale_tile(tl, l));

    VerificationReport rep;
    auto fail_cell = [&](const char* what, std::int64_t a, std::int64_t r, bool up) {
        rep.valid = false;
        rep.violation = what;
        ExactScalar inv(1, l);
        rep.cell = CellRef{LatticePoint{ExactScalar(a) * inv, ExactScalar(r) * inv},
                           up ? Orientation::Up : Orientation::Down};
        rep.detail = std::string(what) + " at cell (" + std::to_string(a) + ", " +
                     std::to_string(r) + ", " + (up ? "U" : "D") + ") / " + l.str();
    };

    // A tile that pokes out of the region anywhere is reported before
    // any coverage defect, in canonical tile order.
    for (std::size_t i = 0; i < tiles.size(); ++i) {
        const auto& st = tiles[i];
        auto [r0, r1] = tile_rows(st);
        bool outside = false;
        for (std::int64_t r = r0; r < r1 && !outside; ++r) {
            for (bool up : {true, false}) {
                auto [lo, hi] = tile_cols(st, r, up);
                if (lo >= hi) continue;
                auto [rlo, rhi] = up ? reg.up_cols(r) : reg.down_cols(r);
                if (lo < rlo || hi > rhi) {
                    outside = true;
                    break;
                }
            }
        }
        if (outside) {
            rep.valid = false;
            rep.violation = "TileOutsideRegion";
            rep.tile_index = static_cast<int>(i);
            rep.detail = "tile " + std::to_string(i) + " leaves the region";
            return rep;
        }
    }

    // Bucket tile column intervals by row, then walk each row against
    // the region interval.
    struct Interval {
        std::int64_t lo, hi;
    };
    std::int64_t rows = reg.bp - reg.bm;
    std::vector<std::vector<Interval>> up_rows(rows), down_rows(rows);
    for (const auto& st : tiles) {
        auto [r0, r1] = tile_rows(st);
        for (std::int64_t r = r0; r < r1; ++r) {
            for (bool up : {true, false}) {
                auto [lo, hi] = tile_cols(st, r, up);
                if (lo < hi) (up ? up_rows : down_rows)[r - reg.bm].push_back({lo, hi});
            }
        }
    }

    for (std::int64_t r = reg.bm; r < reg.bp; ++r) {
        auto& us = up_rows[r - reg.bm];
        auto& ds = down_rows[r - reg.bm];
        auto by_lo = [](const Interval& a, const Interval& b) { return a.lo < b.lo; };
        std::sort(us.begin(), us.end(), by_lo);
        std::sort(ds.begin(), ds.end(), by_lo);

        // First defect of one parity within the row: (column, kind).
        auto walk = [&](const std::vector<Interval>& iv, std::int64_t rlo, std::int64_t rhi)
            -> std::optional<std::pair<std::int64_t, bool>> {
            std::int64_t cursor = rlo;
            for (const auto& seg : iv) {
                if (seg.lo < cursor) return std::make_pair(seg.lo, false); // overlap
                if (seg.lo > cursor) return std::make_pair(cursor, true);  // gap
                cursor = seg.hi;
            }
            if (cursor < rhi) return std::make_pair(cursor, true);
            return std::nullopt;
        };
        auto [ulo, uhi] = reg.up_cols(r);
        auto [dlo, dhi] = reg.down_cols(r);
        auto bad_u = walk(us, ulo, std::max(ulo, uhi));
        auto bad_d = walk(ds, dlo, std::max(dlo, dhi));
        if (bad_u || bad_d) {
            bool use_u = bad_u && (!bad_d || bad_u->first <= bad_d->first);
            auto bad = use_u ? *bad_u : *bad_d;
            fail_cell(bad.second ? "Gap" : "Overlap", bad.first, r, use_u);
            return rep;
        }
    }
    return rep;
}

// Classify every tile vertex: sharp or blunt region corner, straight
// point on the boundary, or interior point.
inline std::map<LatticePoint, VertexClass, LexBaLess> classify_vertices(const Tiling& t) {
    std::map<LatticePoint, VertexClass, LexBaLess> out;
    const auto& reg = t.region();
    for (const auto& tl : t.tiles()) {
        for (const auto& v : tile_vertices(tl)) {
            if (out.count(v)) continue;
            int idx = reg.vertex_index_of(v);
            if (idx >= 0)
                out.emplace(v, reg.sharp_at(idx) ? VertexClass::ThirdPi : VertexClass::TwoThirdsPi);
            else if (reg.on_boundary(v))
                out.emplace(v, VertexClass::Pi);
            else
                out.emplace(v, VertexClass::TwoPi);
        }
    }
    return out;
}

// No two tiles of the tiling are translates of each other, i.e. no two
// share both size and orientation.
inline bool is_t_perfect(const Tiling& t) {
    std::set<std::pair<ExactScalar, bool>> seen;
    for (const auto& tl : t.tiles())
        if (!seen.insert({tl.size, tl.orient == Orientation::Up}).second) return false;
    return true;
}

inline TilingStats stats(const Tiling& t) {
    TilingStats st;
    st.shape = t.region().shape();
    st.n = t.tile_count();
    st.sizes.reserve(t.tiles().size());
    for (const auto& tl : t.tiles()) st.sizes.push_back(tl.size);
    std::sort(st.sizes.begin(), st.sizes.end());
    std::set<ExactScalar> distinct(st.sizes.begin(), st.sizes.end());
    st.s = static_cast<int>(distinct.size());
    st.t_perfect = is_t_perfect(t);
    for (const auto& [v, cls] : classify_vertices(t))
        if (cls == VertexClass::Pi) ++st.v_pi;
    return st;
}

// Indices of tiles that cover a sharp corner of the region.  Each sharp
// corner is covered by exactly one tile, and a tile covers at most one
// sharp corner unless it is the whole region.
inline std::vector<int> exposed_tiles(const Tiling& t) {
    std::vector<int> out;
    const auto& reg = t.region();
    for (int i = 0; i < t.tile_count(); ++i) {
        for (const auto& v : tile_vertices(t.tiles()[i])) {
            int idx = reg.vertex_index_of(v);
            if (idx >= 0 && reg.sharp_at(idx)) {
                out.push_back(i);
                break;
            }
        }
    }
    return out;
}

namespace detail {

// Drop duplicate neighbours and straight vertices from a closed
// boundary walk, producing a list fit for ConvexLatticePolygon.
inline std::vector<LatticePoint> merge_boundary(std::vector<LatticePoint> vs) {
    // Remove consecutive duplicates (cyclically).
    std::vector<LatticePoint> tmp;
    for (const auto& v : vs)
        if (tmp.empty() || !(tmp.back() == v)) tmp.push_back(v);
    while (tmp.size() > 1 && tmp.front() == tmp.back()) tmp.pop_back();
    // Remove straight vertices (cyclically).
    std::vector<LatticePoint> out;
    int m = static_cast<int>(tmp.size());
    for (int i = 0; i < m; ++i) {
        const auto& prev = tmp[(i + m - 1) % m];
        const auto& cur = tmp[i];
        const auto& next = tmp[(i + 1) % m];
        LatticePoint u = cur - prev, w = next - cur;
        if (cross_sign(u, w) == 0 && dot_sign(u, w) > 0) continue;
        out.push_back(cur);
    }
    return out;
}

} // namespace detail

// Remove an exposed tile, shrinking the region across the sharp corner
// the tile covers.  The remainder is convex again.
inline Tiling cut_exposed(const Tiling& t, int tile_index) {
    if (tile_index < 0 || tile_index >= t.tile_count())
        throw Error("NotExposed", "no such tile");
    const auto& reg = t.region();
    const Tile& tl = t.tiles()[tile_index];
    int corner = -1;
    for (const auto& v : tile_vertices(tl)) {
        int idx = reg.vertex_index_of(v);
        if (idx >= 0 && reg.sharp_at(idx)) corner = idx;
    }
    if (corner < 0) throw Error("NotExposed", "tile does not cover a sharp corner");

    int m = reg.vertex_count();
    LatticePoint v = reg.vertex(corner);
    LatticePoint u_in = dir_vector(reg.side_dir(corner - 1));
    LatticePoint u_out = dir_vector(reg.side_dir(corner));
    LatticePoint p = v - u_in * tl.size;  // on the incoming side
    LatticePoint q = v + u_out * tl.size; // on the outgoing side

    // Rebuild starting from the cut corner to keep the walk contiguous.
    std::vector<LatticePoint> walk;
    walk.push_back(p);
    walk.push_back(q);
    for (int i = 1; i < m; ++i) walk.push_back(reg.vertex(corner + i));
    auto merged = detail::merge_boundary(walk);
    if (merged.size() < 3) throw Error("InvalidRegion", "cut leaves no region");

    std::vector<Tile> rest;
    for (int i = 0; i < t.tile_count(); ++i)
        if (i != tile_index) rest.push_back(t.tiles()[i]);
    Tiling out(ConvexLatticePolygon(merged), rest);
    auto rep = verify(out);
    if (!rep.valid) throw Error("InvariantViolation", "cut result fails verification: " + rep.detail);
    return out;
}

namespace detail {

// External tile of size len glued onto the full segment from p along
// direction d; the tile lies on the right of d, outside a region walked
// counterclockwise.
inline Tile external_tile(const LatticePoint& p, Dir d, const ExactScalar& len) {
    switch (d) {
        case Dir::E1: return Tile(Orientation::Down, p, len);
        case Dir::E2: return Tile(Orientation::Up, p, len);
        case Dir::E2mE1: return Tile(Orientation::Down, {p.a - len, p.b + len}, len);
        case Dir::NegE1: return Tile(Orientation::Up, {p.a - len, p.b}, len);
        case Dir::NegE2: return Tile(Orientation::Down, {p.a - len, p.b}, len);
        case Dir::E1mE2: return Tile(Orientation::Up, {p.a, p.b - len}, len);
    }
    throw Error("InvalidTile", "bad direction");
}

} // namespace detail

// Attach a triangle over the full region side that starts at vertex
// side_index; the side length becomes the tile size.  The result is
// always convex; straight vertices created at the side's endpoints are
// merged away.
inline Tiling attach_at_side(const Tiling& t, int side_index) {
    const auto& reg = t.region();
    int m = reg.vertex_count();
    int i = ((side_index % m) + m) % m;
    LatticePoint p = reg.vertex(i);
    Dir d = reg.side_dir(i);
    ExactScalar len = reg.side_len(i);
    Tile cap = detail::external_tile(p, d, len);

    // Apex: the cap vertex on neither segment endpoint.
    LatticePoint q = reg.vertex(i + 1);
    LatticePoint apex;
    bool found = false;
    for (const auto& v : tile_vertices(cap)) {
        if (v == p || v == q) continue;
        apex = v;
        found = true;
    }
    if (!found) throw Error("NonConvexResult", "degenerate cap");

    std::vector<LatticePoint> walk;
    for (int k = 0; k <= m; ++k) {
        walk.push_back(reg.vertex(i + k));
        if (k == 0) walk.push_back(apex);
    }
    walk.pop_back(); // vertex(i + m) duplicates vertex(i)
    auto merged = detail::merge_boundary(walk);

    std::vector<Tile> tiles = t.tiles();
    tiles.push_back(cap);
    Tiling out(ConvexLatticePolygon(merged), tiles);
    auto rep = verify(out);
    if (!rep.valid)
        throw Error("NonConvexResult", "attach result fails verification: " + rep.detail);
    return out;
}

// Attach a triangle over some side of the given length.  When several
// sides match, `expect` (required shape of the result) may narrow the
// choice; if more than one candidate remains the call refuses to guess.
inline Tiling attach_triangle(const Tiling& t, const ExactScalar& side_length,
                              std::optional<ShapeClass> expect = std::nullopt) {
    const auto& reg = t.region();
    std::vector<int> candidates;
    std::vector<Tiling> results;
    for (int i = 0; i < reg.vertex_count(); ++i) {
        if (reg.side_len(i) != side_length) continue;
        Tiling out = attach_at_side(t, i);
        if (expect && out.region().shape() != *expect) continue;
        candidates.push_back(i);
        results.push_back(std::move(out));
    }
    if (results.empty())
        throw Error("NoMatchingSide", "no side of length " + exact_str(side_length) +
                                          (expect ? std::string(" yielding a ") +
                                                        shape_name(*expect)
                                                  : std::string()));
    if (results.size() > 1)
        throw Error("AmbiguousSide", "several sides of length " + exact_str(side_length) +
                                         " match; pass a side index");
    return std::move(results.front());
}

// Attach several tiles at once across one or more region sides (used by
// the strip constructions that split a side among multiple triangles).
// The union must be convex; the attached tiles together with the old
// region must tile it exactly.
inline Tiling attach_split_side(const Tiling& t, const std::vector<Tile>& new_tiles) {
    if (new_tiles.empty()) throw Error("StripMismatch", "no tiles to attach");
    // Convex hull of old region corners and new tile corners.  If the
    // union is convex this is the union; verification then proves it.
    std::vector<LatticePoint> pts = t.region().vertices();
    for (const auto& tl : new_tiles)
        for (const auto& v : tile_vertices(tl)) pts.push_back(v);
    std::sort(pts.begin(), pts.end(), [](const LatticePoint& x, const LatticePoint& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) throw Error("StripMismatch", "degenerate union");
    // Monotone chain; lattice coordinates are an orientation-preserving
    // linear image of the Cartesian plane, so the hull carries over.
    auto append = [&](std::vector<LatticePoint>& h, const LatticePoint& p) {
        while (h.size() >= 2 &&
               cross_sign(h[h.size() - 1] - h[h.size() - 2], p - h[h.size() - 1]) <= 0)
            h.pop_back();
        h.push_back(p);
    };
    std::vector<LatticePoint> lower, upper;
    for (const auto& p : pts) append(lower, p);
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) append(upper, *it);
    std::vector<LatticePoint> hull(lower.begin(), lower.end() - 1);
    hull.insert(hull.end(), upper.begin(), upper.end() - 1);
    if (hull.size() < 3) throw Error("NonConvexResult", "union is degenerate");

    std::vector<Tile> tiles = t.tiles();
    for (const auto& tl : new_tiles) tiles.push_back(tl);
    std::optional<ConvexLatticePolygon> region;
    try {
        region.emplace(detail::merge_boundary(hull));
    } catch (const Error& e) {
        throw Error("NonConvexResult", std::string("union is not a lattice region: ") + e.what());
    }
    Tiling out(*region, tiles);
    auto rep = verify(out);
    if (!rep.valid) throw Error("StripMismatch", "attached tiles do not fit: " + rep.detail);
    return out;
}

struct TrapezoidCollapse {
    bool hypothesis = false; // straight vertices confined to the long side, or n == 3
    int n = 0;
};

// For a trapezoid tiling: if every straight boundary vertex lies on the
// side joining the two sharp corners (or the tiling has three tiles),
// then it must consist of exactly three congruent tiles.
inline TrapezoidCollapse check_trapezoid_collapse(const Tiling& t) {
    const auto& reg = t.region();
    if (reg.shape() != ShapeClass::Trapezoid)
        throw Error("InvalidRegion", "collapse check applies to trapezoids");
    int m = reg.vertex_count();
    int long_side = -1;
    for (int i = 0; i < m; ++i)
        if (reg.sharp_at(i) && reg.sharp_at(i + 1)) long_side = i;
    if (long_side < 0) throw Error("InvalidRegion", "trapezoid without sharp-sharp side");

    LatticePoint p = reg.vertex(long_side);
    Dir d = reg.side_dir(long_side);
    ExactScalar len = reg.side_len(long_side);
    auto on_long_side = [&](const LatticePoint& v) {
        LatticePoint delta = v - p;
        if (delta.a == 0 && delta.b == 0) return true;
        auto cls = classify_direction(delta);
        return cls && cls->first == d && cls->second <= len;
    };

    TrapezoidCollapse out;
    out.n = t.tile_count();
    bool confined = true;
    for (const auto& [v, cls] : classify_vertices(t))
        if (cls == VertexClass::Pi && !on_long_side(v)) confined = false;
    out.hypothesis = confined || out.n == 3;
    if (out.hypothesis) {
        bool ok = out.n == 3;
        if (ok) {
            const auto& ts = t.tiles();
            ok = ts[0].size == ts[1].size && ts[1].size == ts[2].size;
        }
        if (!ok)
            throw Error("InvariantViolation",
                        "trapezoid hypothesis holds but the tiling is not three congruent tiles");
    }
    return out;
}

// Signed up-minus-down weight: sum of up tile sizes minus sum of down
// tile sizes.  For any tiling this equals the region's directional side
// balance on the e1 and e2-e1 axes and its negative on the e2 axis.
inline ExactScalar up_down_weight(const Tiling& t) {
    ExactScalar acc = 0;
    for (const auto& tl : t.tiles())
        acc += tl.orient == Orientation::Up ? tl.size : -tl.size;
    return acc;
}

inline Tiling translate_tiling(const Tiling& t, const LatticePoint& d) {
    std::vector<Tile> tiles;
    tiles.reserve(t.tiles().size());
    for (const auto& tl : t.tiles()) tiles.push_back(translate_tile(tl, d));
    return Tiling(translate_polygon(t.region(), d), tiles);
}

inline Tiling transform_tiling(const Tiling& t, const Transform& tr) {
    std::vector<Tile> tiles;
    tiles.reserve(t.tiles().size());
    for (const auto& tl : t.tiles()) tiles.push_back(transform_tile(tr, tl));
    return Tiling(transform_polygon(tr, t.region()), tiles);
}

inline Tiling scale_tiling(const Tiling& t, const ExactScalar& k) {
    std::vector<Tile> tiles;
    tiles.reserve(t.tiles().size());
    for (const auto& tl : t.tiles()) tiles.emplace_back(tl.orient, tl.anchor * k, tl.size * k);
    return Tiling(scale_polygon(t.region(), k), tiles);
}

} // namespace tritile

#endif
