// SPDX-License-Identifier: MIT
//
// For each shape and tile count n: can the shape be tiled by n
// triangles, and if so how many distinct sizes can appear at best?
// Two tables, one unrestricted and one where every size-orientation
// combination must be unique.  Small n are settled exhaustively; large
// n carry an interval when the best value is pinned only to a range.

#pragma once

#include "tritile/polygon.hpp"

#include <string>

namespace tritile {

enum class Membership { In, Out, Unknown };

struct BoundEntry {
    Membership member = Membership::Out;
    // Best possible number of distinct sizes over all tilings with n
    // tiles, as an interval; meaningful only when member == In.
    int s_lo = 0;
    int s_hi = 0;
};

namespace detail {

inline BoundEntry in_exact(int s) { return {Membership::In, s, s}; }
inline BoundEntry in_range(int lo, int hi) { return {Membership::In, lo, hi}; }
inline BoundEntry out() { return {Membership::Out, 0, 0}; }
inline BoundEntry unknown() { return {Membership::Unknown, 0, 0}; }

inline BoundEntry plain_bounds(ShapeClass shape, int n) {
    switch (shape) {
    case ShapeClass::Triangle:
        if (n == 1 || n == 4) return in_exact(1);
        if (n == 2 || n == 3 || n == 5) return out();
        if (n == 6) return in_exact(2);
        return in_exact(n - 5);
    case ShapeClass::Trapezoid:
        if (n == 3) return in_exact(1);
        if (n == 1 || n == 2 || n == 4) return out();
        if (n == 5) return in_exact(2);
        return in_exact(n - 4);
    case ShapeClass::Parallelogram:
        if (n == 2 || n == 4) return in_exact(1);
        if (n == 1 || n == 3) return out();
        if (n == 5) return in_exact(2);
        return in_exact(n - 4);
    case ShapeClass::Pentagon:
        if (n < 4) return out();
        if (n == 4) return in_exact(2);
        return in_exact(n - 3);
    default:
        if (n < 6) return out();
        if (n == 6) return in_exact(1);
        if (n == 7) return in_exact(2);
        if (n == 8) return in_exact(3);
        if (n == 20 || n == 23 || n >= 26) return in_range(n - 5, n - 4);
        return in_exact(n - 4);
    }
}

inline BoundEntry unique_pair_bounds(ShapeClass shape, int n) {
    switch (shape) {
    case ShapeClass::Triangle:
        if (n == 1) return in_exact(1);
        if (n <= 14) return out();
        if (n == 16) return in_exact(n - 6);
        if (n == 27 || n >= 29) return in_range(n - 6, n - 5);
        return in_exact(n - 5);
    case ShapeClass::Trapezoid:
        if (n <= 12) return out();
        if (n == 13 || n == 15 || n == 26 || n >= 28) return in_range(n - 5, n - 4);
        return in_exact(n - 4);
    case ShapeClass::Parallelogram:
        if (n == 2) return in_exact(1);
        if (n <= 12) return out();
        if (n == 15 || n == 18 || n == 19 || n == 21 || n == 22 || n == 23 || n == 26)
            return in_exact(n - 4);
        return in_range(n - 5, n - 4);
    case ShapeClass::Pentagon:
        if (n <= 11) return out();
        return in_exact(n - 4);
    default:
        if (n <= 10) return out();
        if (n == 12 || n == 13) return unknown();
        if (n == 11 || (n >= 14 && n <= 19 && n != 16) || n == 22) return in_exact(n - 4);
        if (n == 16 || n == 20 || n == 21 || n == 23) return in_range(n - 5, n - 4);
        return in_range(n - 6, n - 4);
    }
}

} // namespace detail

// Membership and best-distinct-size bounds for tilings of the shape by
// n triangles; `unique_pairs` restricts to tilings where no two tiles
// share both size and orientation.
inline BoundEntry expected_bounds(ShapeClass shape, int n, bool unique_pairs) {
    if (n < 1) throw Error("InvalidN", "tile counts start at 1");
    return unique_pairs ? detail::unique_pair_bounds(shape, n)
                        : detail::plain_bounds(shape, n);
}

} // namespace tritile
