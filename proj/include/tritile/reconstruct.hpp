// SPDX-License-Identifier: MIT
//
// Reconstruction: given only the multiset of tile sizes, recover the
// regions of a chosen shape class that the multiset can tile, with the
// tilings themselves.
//
// Candidate regions are filtered arithmetically before any search
// runs.  The region area must equal the sum of the squared sizes, and
// every side of a tiled region is partitioned into whole tile edges,
// so every side length must be a subset sum of the multiset.  For
// hexagons the top side t is bounded as well: the boundary consists of
// whole tile edges, so the perimeter 3t - x - y - z is at most three
// times the sum of all sizes, while the up-down balance forces
// x + y + z = t - w with |w| at most that sum; together t <= 2 * sum.
// What survives the filters is searched with the exact multiset.

#pragma once

#include "tritile/search.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <string>
#include <vector>

namespace tritile {

namespace detail {

inline long long isqrt64(long long n) {
    if (n < 0) return -1;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace detail

struct ReconstructOptions {
    bool t_perfect_only = false;
    long long max_results = 1; // tilings kept per region; negative: all
    bool all_regions = false;  // keep scanning after the first tileable region
    SearchBudget budget;       // shared across the whole reconstruction
};

struct ReconstructHit {
    ConvexLatticePolygon region;
    SearchResult found;
};

struct ReconstructResult {
    std::vector<ReconstructHit> hits;
    long long candidates = 0; // regions that passed the arithmetic filters
    bool complete = true;
    long long nodes = 0;
};

inline ReconstructResult reconstruct_regions(ShapeClass shape,
                                             const std::vector<ExactScalar>& sizes,
                                             const ReconstructOptions& opt = {}) {
    if (sizes.empty()) throw Error("InvalidArgument", "the size multiset is empty");
    for (const auto& s : sizes)
        if (s <= 0) throw Error("InvalidArgument", "tile sizes must be positive");

    // Work on integers: scale away the denominators, enumerate the
    // candidate regions at that scale, and divide back when building
    // the actual polygons.
    Int l = 1;
    for (const auto& s : sizes) l = exact_lcm(l, exact_den(s));
    Int sum = 0, area = 0;
    std::vector<long long> scaled;
    scaled.reserve(sizes.size());
    for (const auto& s : sizes) {
        Int v = exact_num(s * l);
        scaled.push_back(to_i64(v));
        sum += v;
        area += v * v;
    }
    long long S = to_i64(sum), A = to_i64(area);
    if (S > 50'000'000)
        throw Error("RegionTooLarge",
                    "total size " + std::to_string(S) + " exceeds the subset-sum table limit");

    // sum_ok[j]: some sub-multiset adds up to j.
    std::vector<char> sum_ok(static_cast<std::size_t>(S) + 1, 0);
    sum_ok[0] = 1;
    for (long long s : scaled)
        for (long long j = S; j >= s; --j)
            sum_ok[static_cast<std::size_t>(j)] |= sum_ok[static_cast<std::size_t>(j - s)];
    auto in_sums = [&](long long x) {
        return x >= 1 && x <= S && sum_ok[static_cast<std::size_t>(x)];
    };
    std::vector<long long> vals;
    for (long long j = 1; j <= S; ++j)
        if (sum_ok[static_cast<std::size_t>(j)]) vals.push_back(j);

    // Candidate parameters, in scan order.  The entries are the make_*
    // arguments for the shape, still at the integer scale.
    std::vector<std::array<long long, 4>> params;
    switch (shape) {
        case ShapeClass::Triangle: {
            long long t = detail::isqrt64(A);
            if (t * t == A && in_sums(t)) params.push_back({t, 0, 0, 0});
            break;
        }
        case ShapeClass::Trapezoid:
            // Sides (l, l-c, c, l-c) with area l^2 - c^2.
            for (long long c : vals) {
                long long t = detail::isqrt64(A + c * c);
                if (t * t != A + c * c || t - c < 1) continue;
                if (in_sums(t) && in_sums(t - c)) params.push_back({t, c, 0, 0});
            }
            break;
        case ShapeClass::Parallelogram:
            // Sides (a, b, a, b) with area 2ab; a <= b is canonical.
            if (A % 2 == 0) {
                long long half = A / 2;
                for (long long a : vals) {
                    if (a * a > half) break;
                    if (half % a != 0) continue;
                    long long b = half / a;
                    if (in_sums(b)) params.push_back({a, b, 0, 0});
                }
            }
            break;
        case ShapeClass::Pentagon:
            // Sides (x-al, al, x-al-be, be, x-be) with area
            // x^2 - al^2 - be^2; al <= be is canonical.  x - al is a
            // subset sum, so x <= S + al bounds be.
            for (std::size_t i = 0; i < vals.size(); ++i) {
                long long al = vals[i];
                long long be_max_sq = (S + al) * (S + al) - A - al * al;
                for (std::size_t j = i; j < vals.size(); ++j) {
                    long long be = vals[j];
                    if (be * be > be_max_sq) break;
                    long long x2 = A + al * al + be * be;
                    long long x = detail::isqrt64(x2);
                    if (x * x != x2 || x - al - be < 1) continue;
                    if (in_sums(x - al) && in_sums(x - be) && in_sums(x - al - be))
                        params.push_back({x, al, be, 0});
                }
            }
            break;
        case ShapeClass::Hexagon: {
            // Area t^2 - x^2 - y^2 - z^2 with cuts x <= y <= z; the
            // hexagon symmetries permute the cuts freely.
            long long t_lo = detail::isqrt64(A + 3);
            while (t_lo * t_lo < A + 3) ++t_lo;
            long long t_hi = 2 * S;
            for (long long t = t_lo; t <= t_hi; ++t) {
                long long r = t * t - A; // x^2 + y^2 + z^2
                if (r < 3) continue;
                long long z_lo = detail::isqrt64(r / 3);
                while (3 * z_lo * z_lo < r) ++z_lo;
                long long z_hi = std::min(t - 2, detail::isqrt64(r - 2));
                for (auto zi = std::lower_bound(vals.begin(), vals.end(), z_lo);
                     zi != vals.end() && *zi <= z_hi; ++zi) {
                    long long z = *zi;
                    long long r2 = r - z * z; // x^2 + y^2
                    long long y_lo = detail::isqrt64(r2 / 2);
                    while (2 * y_lo * y_lo < r2) ++y_lo;
                    long long y_hi = std::min(z, detail::isqrt64(r2 - 1));
                    for (auto yi = std::lower_bound(vals.begin(), vals.end(), y_lo);
                         yi != vals.end() && *yi <= y_hi; ++yi) {
                        long long y = *yi;
                        long long x2 = r2 - y * y;
                        long long x = detail::isqrt64(x2);
                        if (x * x != x2 || !in_sums(x)) continue;
                        if (t - y - z < 1) continue;
                        if (!in_sums(t - x - z) || !in_sums(t - x - y) || !in_sums(t - y - z))
                            continue;
                        // The same hexagon is a cut triangle the other
                        // way up, with the gaps as cuts and
                        // t' = 2t - x - y - z; that tuple passes the
                        // same filters, so keep only the smaller of
                        // the two whenever both are in scan range.
                        std::array<long long, 4> tup{t, x, y, z};
                        std::array<long long, 4> opp{2 * t - x - y - z, t - y - z,
                                                     t - x - z, t - x - y};
                        if (opp < tup && opp[0] >= t_lo && opp[0] <= t_hi) continue;
                        params.push_back({t, x, y, z});
                    }
                }
            }
            break;
        }
    }

    auto build = [&](const std::array<long long, 4>& p) {
        auto q = [&](long long v) { return ExactScalar(Int(v), l); };
        switch (shape) {
            case ShapeClass::Triangle: return make_triangle(q(p[0]));
            case ShapeClass::Trapezoid: return make_trapezoid(q(p[0]), q(p[1]));
            case ShapeClass::Parallelogram: return make_parallelogram(q(p[0]), q(p[1]));
            case ShapeClass::Pentagon: return make_pentagon(q(p[0]), q(p[1]), q(p[2]));
            case ShapeClass::Hexagon: break;
        }
        return make_hexagon(q(p[0]), q(p[1]), q(p[2]), q(p[3]));
    };

    ReconstructResult out;
    out.candidates = static_cast<long long>(params.size());
    auto start = std::chrono::steady_clock::now();
    for (const auto& p : params) {
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool exhausted = false;
        CoverOptions co;
        co.budget = detail::remaining_budget(opt.budget, out.nodes, elapsed, exhausted);
        if (exhausted) {
            out.complete = false;
            break;
        }
        co.multiset = sizes;
        co.t_perfect_only = opt.t_perfect_only;
        co.max_results = opt.max_results;
        SearchResult r = cover_region(build(p), co);
        out.nodes += r.nodes;
        bool capped = opt.max_results >= 0 &&
                      static_cast<long long>(r.tilings.size()) >= opt.max_results;
        if (!r.complete && !capped) {
            out.complete = false;
            if (!r.tilings.empty()) out.hits.push_back({build(p), std::move(r)});
            break;
        }
        if (!r.tilings.empty()) {
            out.hits.push_back({build(p), std::move(r)});
            if (!opt.all_regions) break;
        }
    }
    return out;
}

} // namespace tritile
