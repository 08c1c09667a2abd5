// SPDX-License-Identifier: MIT
//
// The two integer sequences driving the spiral constructions, plus the
// growth inequalities that make those constructions valid at every
// step.

#pragma once

#include "tritile/exact.hpp"

#include <vector>

namespace tritile {

// 1, 1, 1, 2, 2, 3, 4, 5, 7, 9, 12, ...  with a(n) = a(n-3) + a(n-2).
inline Int padovan(int n) {
    if (n < 0) throw Error("InvalidN", "padovan index must be nonnegative");
    static const std::vector<Int> base{1, 1, 1};
    std::vector<Int> p(base);
    p.reserve(n + 1);
    for (int i = 3; i <= n; ++i) p.push_back(p[i - 3] + p[i - 2]);
    return p[n];
}

// 8, 11, 9, 19, 20, 28, ...  indexed from 8, with the same recurrence
// a(n) = a(n-3) + a(n-2) from index 11 on.
inline Int q_seq(int n) {
    if (n < 8) throw Error("InvalidN", "q sequence starts at index 8");
    std::vector<Int> q{8, 11, 9};
    q.reserve(n - 7);
    for (int i = 11; i <= n; ++i) q.push_back(q[i - 11] + q[i - 10]);
    return q[n - 8];
}

// One third of the consecutive gap q(n-1) - q(n-2); the middle tile
// size of the five-tile hexagon extension.
inline ExactScalar q_step_third(int n) {
    if (n < 10) throw Error("InvalidN", "gap needs indices down to 8");
    return ExactScalar(q_seq(n - 1) - q_seq(n - 2)) / 3;
}

// Whether that third avoids every tile size the pentagon tower can
// contain: the seed sizes and all q values.  A fractional third is
// always fresh.
inline bool q_third_is_fresh(int n) {
    ExactScalar a = q_step_third(n);
    if (!is_integer(a)) return true;
    Int v = exact_num(a);
    for (Int s : {Int(2), Int(3), Int(5), Int(7), Int(8), Int(9), Int(11), Int(12)})
        if (v == s) return false;
    for (int m = 8; q_seq(m) <= v || m < 14; ++m)
        if (q_seq(m) == v) return false;
    return true;
}

// Sandwich inequality 2 a(n-3) < a(n) < 2 a(n-2) for the first
// sequence.  It holds for every n >= 3 except 3, 4 and 6, and those
// three exceptions are confirmed too.
inline bool check_growth_p(int upto) {
    for (int n = 3; n <= upto; ++n) {
        Int pn = padovan(n);
        bool holds = 2 * padovan(n - 3) < pn && pn < 2 * padovan(n - 2);
        bool expected = (n != 3 && n != 4 && n != 6);
        if (holds != expected)
            throw Error("InvariantViolation", "sandwich inequality at " + std::to_string(n));
    }
    return true;
}

// Recurrence identities and monotone growth of the second sequence.
inline bool check_growth_q(int upto) {
    auto fail = [](const std::string& what, int n) -> Error {
        return Error("InvariantViolation", what + " at " + std::to_string(n));
    };
    for (int n = 11; n <= upto; ++n) {
        if (q_seq(n) != q_seq(n - 3) + q_seq(n - 2)) throw fail("recurrence", n);
        if (q_seq(n) <= q_seq(n - 1)) throw fail("monotonicity", n);
        if (q_seq(n) <= 12) throw fail("size floor", n);
    }
    for (int n = 12; n <= upto; ++n)
        if (q_seq(n) + q_seq(n - 4) != q_seq(n + 1)) throw fail("step identity", n);
    for (int n = 14; n <= upto; ++n)
        if (q_seq(n - 1) - q_seq(n - 2) != q_seq(n - 6)) throw fail("gap identity", n);
    // The five-tile extension sizes sit strictly between the two
    // consecutive q values they interpolate.
    for (int n = 14; n <= upto; ++n) {
        ExactScalar a = q_step_third(n);
        ExactScalar b = ExactScalar(q_seq(n - 2)) + a;
        ExactScalar c = ExactScalar(q_seq(n - 1)) - a;
        if (!(ExactScalar(q_seq(n - 2)) < b && b < c && c < ExactScalar(q_seq(n - 1))))
            throw fail("interpolation", n);
    }
    return true;
}

} // namespace tritile
