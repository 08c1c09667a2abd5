// SPDX-License-Identifier: MIT
//
// Enumeration of tilings across whole families of regions.
//
// Tilings are identified up to similarity: rotation, reflection,
// translation and rescaling.  The canonical form applies each of the
// twelve lattice symmetries, moves the least region vertex to the
// origin, rescales to integers with overall gcd one, and keeps the
// candidate whose serialization is smallest; that text doubles as a
// dictionary key.  A sweep over every region of one shape class with
// side lengths up to a cap then counts canonical forms per tile count,
// and theorem_scan compares the outcome of such sweeps against the
// membership and bound tables.

#pragma once

#include "tritile/bounds.hpp"
#include "tritile/search.hpp"
#include "tritile/tritile_io.hpp"

#include <array>
#include <chrono>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tritile {

// Canonical representative of a tiling under similarity.
inline Tiling canonical_form(const Tiling& t) {
    std::vector<Tiling> best;
    std::string best_text;
    for (const auto& g : point_group()) {
        Tiling u = transform_tiling(t, g);
        const auto& reg = u.region();
        LatticePoint v0 = reg.vertex(reg.canonical_start());
        Tiling v = translate_tiling(u, LatticePoint{-v0.a, -v0.b});

        // Rescale so every coordinate and size is an integer and the
        // gcd over all of them is one.
        Int l = detail::common_scale(v);
        Int d = 0;
        auto fold = [&](const ExactScalar& x) { d = exact_gcd(d, exact_num(x * l)); };
        for (const auto& p : v.region().vertices()) {
            fold(p.a);
            fold(p.b);
        }
        for (const auto& tl : v.tiles()) {
            fold(tl.anchor.a);
            fold(tl.anchor.b);
            fold(tl.size);
        }
        Tiling w = scale_tiling(v, ExactScalar(l, d));

        std::string text = to_text(w);
        if (best.empty() || text < best_text) {
            best.clear();
            best.push_back(std::move(w));
            best_text = std::move(text);
        }
    }
    return best.front();
}

// The canonical serialization; equal exactly for similar tilings.
inline std::string canonical_tiling_key(const Tiling& t) { return to_text(canonical_form(t)); }

// Every region of the given shape class whose side lengths all lie in
// [1, cap], one representative per congruence class, in a fixed order.
inline std::vector<ConvexLatticePolygon> sweep_regions(ShapeClass shape, long long cap) {
    if (cap < 1) throw Error("InvalidArgument", "side length cap must be at least 1");
    std::vector<ConvexLatticePolygon> out;
    switch (shape) {
        case ShapeClass::Triangle:
            for (long long t = 1; t <= cap; ++t) out.push_back(make_triangle(t));
            break;
        case ShapeClass::Trapezoid:
            for (long long l = 2; l <= cap; ++l)
                for (long long c = 1; c < l; ++c) out.push_back(make_trapezoid(l, c));
            break;
        case ShapeClass::Parallelogram:
            for (long long a = 1; a <= cap; ++a)
                for (long long b = a; b <= cap; ++b) out.push_back(make_parallelogram(a, b));
            break;
        case ShapeClass::Pentagon:
            // Sides (x-al, al, x-al-be, be, x-be); mirroring swaps al
            // and be, so al <= be covers every class.
            for (long long al = 1; al <= cap; ++al)
                for (long long be = al; be <= cap; ++be)
                    for (long long x = al + be + 1; x <= al + cap; ++x)
                        out.push_back(make_pentagon(x, al, be));
            break;
        case ShapeClass::Hexagon:
            // Sides (t-x-z, x, t-x-y, y, t-y-z, z); the symmetries of
            // the hexagon permute the corner cuts x, y, z freely.  The
            // same hexagon is also a cut triangle the other way up,
            // with the side gaps as cuts and t' = 2t - x - y - z; keep
            // whichever parametrization compares smaller.
            for (long long x = 1; x <= cap; ++x)
                for (long long y = x; y <= cap; ++y)
                    for (long long z = y; z <= cap; ++z)
                        for (long long t = y + z + 1; t <= x + y + cap; ++t) {
                            std::array<long long, 4> tup{t, x, y, z};
                            std::array<long long, 4> opp{2 * t - x - y - z, t - y - z,
                                                         t - x - z, t - x - y};
                            if (opp < tup) continue;
                            out.push_back(make_hexagon(t, x, y, z));
                        }
            break;
    }
    return out;
}

struct EnumerateOptions {
    long long scale = 6;     // swept regions have sides 1..scale
    long long max_tiles = 8; // tilings with up to this many tiles
    bool t_perfect_only = false;
    // Number of partition classes for the root branches of each region
    // search.  The classes are run one after another; the aggregate
    // does not depend on the partition, so any value produces the same
    // rows as jobs = 1.
    int jobs = 1;
    SearchBudget budget; // shared across the whole sweep
    // Called once per tiling found, before similarity reduction; lets a
    // conformance run fold extra checks over the stream.
    std::function<void(const Tiling&)> observer;
};

struct EnumerationRow {
    long long n = 0;         // number of tiles
    long long classes = 0;   // tilings, distinct up to similarity
    long long best_s = 0;    // most distinct sizes seen with n tiles
    std::string witness_key; // canonical form reaching best_s
};

struct EnumerationResult {
    std::vector<EnumerationRow> rows; // ascending n; only n that occur
    bool complete = true;
    long long nodes = 0;
};

namespace detail {

inline long long region_height(const ConvexLatticePolygon& poly) {
    ExactScalar lo = poly.vertex(0).b, hi = lo;
    for (const auto& v : poly.vertices()) {
        if (v.b < lo) lo = v.b;
        if (v.b > hi) hi = v.b;
    }
    return to_i64(exact_floor(hi - lo));
}

} // namespace detail

// Count tiling classes per tile count over every region of one shape
// class with sides up to opt.scale.  Any tiling of any region similar
// to a swept one reduces to a tiling found here, so the rows cover the
// whole similarity family, not just integer data.
inline EnumerationResult enumerate_tilings(ShapeClass shape, const EnumerateOptions& opt = {}) {
    if (opt.max_tiles < 1) throw Error("InvalidArgument", "max_tiles must be at least 1");
    if (opt.jobs < 1) throw Error("InvalidArgument", "jobs must be at least 1");

    struct Agg {
        std::set<std::string> keys;
        long long best_s = -1;
        std::string witness;
    };
    std::map<long long, Agg> by_n;

    EnumerationResult out;
    std::vector<ConvexLatticePolygon> regions = sweep_regions(shape, opt.scale);
    auto start = std::chrono::steady_clock::now();

    for (int w = 0; w < opt.jobs && out.complete; ++w) {
        for (const auto& region : regions) {
            double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                                 .count();
            bool exhausted = false;
            CoverOptions co;
            co.budget = detail::remaining_budget(opt.budget, out.nodes, elapsed, exhausted);
            if (exhausted) {
                out.complete = false;
                break;
            }
            co.max_tiles = opt.max_tiles;
            co.max_size = detail::region_height(region);
            co.t_perfect_only = opt.t_perfect_only;
            if (opt.jobs > 1) {
                int jobs = opt.jobs;
                co.branch_filter = [w, jobs](long long b) { return b % jobs == w; };
            }
            co.accept = [&](const Tiling& t) {
                if (opt.observer) opt.observer(t);
                TilingStats st = stats(t);
                std::string key = canonical_tiling_key(t);
                Agg& agg = by_n[st.n];
                agg.keys.insert(key);
                long long s = st.s;
                if (s > agg.best_s || (s == agg.best_s && key < agg.witness)) {
                    agg.best_s = s;
                    agg.witness = key;
                }
                return false; // aggregated, not stored
            };
            SearchResult r = cover_region(region, co);
            out.nodes += r.nodes;
            if (!r.complete) {
                out.complete = false;
                break;
            }
        }
    }

    for (const auto& [n, agg] : by_n)
        out.rows.push_back({n, static_cast<long long>(agg.keys.size()), agg.best_s, agg.witness});
    return out;
}

// Independent cross-check for the search engine, usable on regions of
// at most 16 cells.  Tilings are counted by picking, at the first
// uncovered cell, every placed tile containing that cell; nothing is
// assumed about where a tile must be anchored, so agreement with
// cover_region checks the engine's forced-anchor argument.
inline std::map<long long, long long> naive_tiling_counts(const ConvexLatticePolygon& region,
                                                          long long max_tiles,
                                                          bool t_perfect_only = false) {
    Int l = 1;
    for (const auto& v : region.vertices()) {
        l = exact_lcm(l, exact_den(v.a));
        l = exact_lcm(l, exact_den(v.b));
    }
    detail::ScaledRegion sr = detail::scale_region(region, l);

    // Cell ids in row-major order, up cells before down cells.
    std::map<std::tuple<std::int64_t, std::int64_t, bool>, int> cell_id;
    for (std::int64_t r = sr.bm; r < sr.bp; ++r) {
        auto [ulo, uhi] = sr.up_cols(r);
        for (std::int64_t a = ulo; a < uhi; ++a)
            cell_id.emplace(std::make_tuple(r, a, true), static_cast<int>(cell_id.size()));
        auto [dlo, dhi] = sr.down_cols(r);
        for (std::int64_t a = dlo; a < dhi; ++a)
            cell_id.emplace(std::make_tuple(r, a, false), static_cast<int>(cell_id.size()));
    }
    int cells = static_cast<int>(cell_id.size());
    if (cells > 16)
        throw Error("RegionTooLarge",
                    "cross-check is exponential; the region has " + std::to_string(cells) +
                        " cells, the limit is 16");

    // Every tile that fits inside the region, regardless of position.
    struct Candidate {
        std::vector<int> covers;
        std::int64_t s = 0;
        bool up = true;
    };
    std::vector<Candidate> tiles;
    std::vector<std::vector<int>> at_cell(static_cast<std::size_t>(cells));
    for (std::int64_t s = 1; s <= sr.bp - sr.bm; ++s) {
        for (std::int64_t y = sr.bm - s; y <= sr.bp + s; ++y) {
            for (std::int64_t x = sr.am - s; x <= sr.ap + s; ++x) {
                for (bool up : {true, false}) {
                    detail::ScaledTile t{x, y, s, up};
                    auto [r0, r1] = detail::tile_rows(t);
                    Candidate c;
                    c.s = s;
                    c.up = up;
                    bool ok = true;
                    for (std::int64_t r = r0; r < r1 && ok; ++r) {
                        for (bool parity : {true, false}) {
                            auto [lo, hi] = detail::tile_cols(t, r, parity);
                            for (std::int64_t a = lo; a < hi; ++a) {
                                auto it = cell_id.find(std::make_tuple(r, a, parity));
                                if (it == cell_id.end()) {
                                    ok = false;
                                    break;
                                }
                                c.covers.push_back(it->second);
                            }
                            if (!ok) break;
                        }
                    }
                    if (!ok) continue;
                    int idx = static_cast<int>(tiles.size());
                    for (int cell : c.covers) at_cell[static_cast<std::size_t>(cell)].push_back(idx);
                    tiles.push_back(std::move(c));
                }
            }
        }
    }

    std::map<long long, long long> counts;
    std::vector<char> covered(static_cast<std::size_t>(cells), 0);
    std::set<std::pair<std::int64_t, bool>> used;
    long long placed = 0;

    auto dfs = [&](auto&& self, int from) -> void {
        int first = -1;
        for (int c = from; c < cells; ++c)
            if (!covered[static_cast<std::size_t>(c)]) {
                first = c;
                break;
            }
        if (first < 0) {
            ++counts[placed];
            return;
        }
        if (placed >= max_tiles) return;
        for (int idx : at_cell[static_cast<std::size_t>(first)]) {
            const Candidate& t = tiles[static_cast<std::size_t>(idx)];
            if (t_perfect_only && used.count({t.s, t.up})) continue;
            bool free = true;
            for (int c : t.covers)
                if (covered[static_cast<std::size_t>(c)]) {
                    free = false;
                    break;
                }
            if (!free) continue;
            for (int c : t.covers) covered[static_cast<std::size_t>(c)] = 1;
            if (t_perfect_only) used.insert({t.s, t.up});
            ++placed;
            self(self, first + 1);
            --placed;
            if (t_perfect_only) used.erase({t.s, t.up});
            for (int c : t.covers) covered[static_cast<std::size_t>(c)] = 0;
        }
    };
    dfs(dfs, 0);
    return counts;
}

struct TheoremScanOptions {
    long long scale = 6;
    long long max_tiles = 8;
    bool unique_pairs = false;
    int jobs = 1;
    SearchBudget budget;
    // Forwarded to every per-shape enumeration.
    std::function<void(const Tiling&)> observer;
};

struct TheoremScanReport {
    // One enumeration per shape class, in declaration order.
    std::vector<std::pair<ShapeClass, EnumerationResult>> scans;
    // Hard contradictions between the sweep and the tables: a tile
    // count the tables rule out, or a tiling with more distinct sizes
    // than the proven maximum.
    std::vector<std::string> violations;
    // Open table rows the sweep settled.
    std::vector<std::string> notes;
    bool complete = true;
    long long nodes = 0;
};

// Sweep all five shape classes and compare what is found against the
// membership and bound tables.  A sweep can only exhibit tilings, so a
// tile count missing from the rows proves nothing; found rows must
// respect the tables, and any clash is reported as a violation.
inline TheoremScanReport theorem_scan(const TheoremScanOptions& opt = {}) {
    TheoremScanReport report;
    auto start = std::chrono::steady_clock::now();
    for (ShapeClass shape : {ShapeClass::Triangle, ShapeClass::Trapezoid,
                             ShapeClass::Parallelogram, ShapeClass::Pentagon,
                             ShapeClass::Hexagon}) {
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool exhausted = false;
        EnumerateOptions eo;
        eo.scale = opt.scale;
        eo.max_tiles = opt.max_tiles;
        eo.t_perfect_only = opt.unique_pairs;
        eo.jobs = opt.jobs;
        eo.observer = opt.observer;
        eo.budget = detail::remaining_budget(opt.budget, report.nodes, elapsed, exhausted);
        if (exhausted) {
            report.complete = false;
            break;
        }
        EnumerationResult er = enumerate_tilings(shape, eo);
        report.nodes += er.nodes;
        if (!er.complete) report.complete = false;
        for (const auto& row : er.rows) {
            BoundEntry e = expected_bounds(shape, static_cast<int>(row.n), opt.unique_pairs);
            std::string where =
                std::string(shape_name(shape)) + " n=" + std::to_string(row.n);
            if (e.member == Membership::Out)
                report.violations.push_back(where + ": tiling found where none should exist");
            else if (e.member == Membership::In && row.best_s > e.s_hi)
                report.violations.push_back(where + ": s=" + std::to_string(row.best_s) +
                                            " beats the proven maximum " +
                                            std::to_string(e.s_hi));
            else if (e.member == Membership::Unknown)
                report.notes.push_back(where + ": open row settled, tilings exist (best s=" +
                                       std::to_string(row.best_s) + " within this sweep)");
        }
        report.scans.emplace_back(shape, std::move(er));
    }
    return report;
}

} // namespace tritile
