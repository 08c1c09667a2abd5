// SPDX-License-Identifier: MIT
//
// Points and directions of the triangular lattice.
//
// Coordinates (a, b) name the point a*e1 + b*e2 where e1 = (1, 0) and
// e2 = (1/2, sqrt(3)/2) in Cartesian terms.  All six unit directions of
// the lattice (+-e1, +-e2, +-(e2-e1)) have Cartesian length 1, and the
// Cartesian cross product of two lattice vectors is sqrt(3)/2 times
// (a1*b2 - a2*b1), so orientation tests reduce to exact rational
// arithmetic on the coordinates alone.

#ifndef TRITILE_POINT_HPP
#define TRITILE_POINT_HPP

#include "exact.hpp"

#include <array>
#include <compare>
#include <cstdlib>
#include <optional>

namespace tritile {

struct LatticePoint {
    ExactScalar a, b;

    LatticePoint() = default;
    LatticePoint(ExactScalar a_, ExactScalar b_) : a(std::move(a_)), b(std::move(b_)) {}

    bool operator==(const LatticePoint& o) const { return a == o.a && b == o.b; }
    bool operator!=(const LatticePoint& o) const { return !(*this == o); }

    LatticePoint operator+(const LatticePoint& o) const { return {a + o.a, b + o.b}; }
    LatticePoint operator-(const LatticePoint& o) const { return {a - o.a, b - o.b}; }
    LatticePoint operator*(const ExactScalar& k) const { return {a * k, b * k}; }
};

// Row-major order: by b first, then a.  This is the tie-break used for
// canonical vertex starts and tile sorting throughout the library.
inline bool lex_ba_less(const LatticePoint& p, const LatticePoint& q) {
    if (p.b != q.b) return p.b < q.b;
    return p.a < q.a;
}

struct LexBaLess {
    bool operator()(const LatticePoint& p, const LatticePoint& q) const {
        return lex_ba_less(p, q);
    }
};

// Sign of the Cartesian cross product of lattice vectors u and v.
inline int cross_sign(const LatticePoint& u, const LatticePoint& v) {
    ExactScalar c = u.a * v.b - v.a * u.b;
    return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

inline ExactScalar cross_value(const LatticePoint& u, const LatticePoint& v) {
    return u.a * v.b - v.a * u.b;
}

// Sign of the Cartesian dot product (scaled by 2, which keeps it exact).
inline int dot_sign(const LatticePoint& u, const LatticePoint& v) {
    ExactScalar d = 2 * u.a * v.a + u.a * v.b + v.a * u.b + 2 * u.b * v.b;
    return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

// Squared Cartesian length of a lattice vector: a^2 + a*b + b^2.
inline ExactScalar norm2(const LatticePoint& u) {
    return u.a * u.a + u.a * u.b + u.b * u.b;
}

// The six unit directions in counterclockwise order starting from e1.
// Index i corresponds to a Cartesian angle of 60*i degrees.
enum class Dir : int { E1 = 0, E2 = 1, E2mE1 = 2, NegE1 = 3, NegE2 = 4, E1mE2 = 5 };

inline LatticePoint dir_vector(Dir d) {
    static const std::array<LatticePoint, 6> table = {
        LatticePoint{1, 0},  LatticePoint{0, 1},  LatticePoint{-1, 1},
        LatticePoint{-1, 0}, LatticePoint{0, -1}, LatticePoint{1, -1},
    };
    return table[static_cast<int>(d)];
}

inline Dir dir_opposite(Dir d) { return static_cast<Dir>((static_cast<int>(d) + 3) % 6); }

// Rotate a direction counterclockwise by steps of 60 degrees.
inline Dir dir_rotate(Dir d, int steps) {
    int i = (static_cast<int>(d) + steps) % 6;
    if (i < 0) i += 6;
    return static_cast<Dir>(i);
}

// Classify a nonzero displacement as (unit direction, positive length),
// or nothing when the displacement does not follow a lattice direction.
inline std::optional<std::pair<Dir, ExactScalar>> classify_direction(const LatticePoint& d) {
    if (d.b == 0) {
        if (d.a == 0) return std::nullopt;
        return d.a > 0 ? std::make_pair(Dir::E1, d.a) : std::make_pair(Dir::NegE1, -d.a);
    }
    if (d.a == 0)
        return d.b > 0 ? std::make_pair(Dir::E2, d.b) : std::make_pair(Dir::NegE2, -d.b);
    if (d.a == -d.b)
        return d.b > 0 ? std::make_pair(Dir::E2mE1, d.b) : std::make_pair(Dir::E1mE2, d.a);
    return std::nullopt;
}

// Counterclockwise angular order of nonzero vectors, starting at the
// positive e1 axis.  Works for arbitrary rational vectors, which is
// needed because graph nodes sit at tile centroids as well as lattice
// vertices.  Vectors are first split into the half-plane classes
// [0, pi) and [pi, 2*pi); within a class the cross product decides.
inline bool angle_less(const LatticePoint& u, const LatticePoint& v) {
    auto half = [](const LatticePoint& w) {
        return (w.b > 0 || (w.b == 0 && w.a > 0)) ? 0 : 1;
    };
    int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    return cross_sign(u, v) > 0;
}

// An element of the point symmetry group of the lattice: the six
// rotations by multiples of 60 degrees and their compositions with the
// coordinate-swap mirror.  det is +1 for rotations, -1 for reflections.
struct Transform {
    int m00, m01, m10, m11;

    LatticePoint apply(const LatticePoint& p) const {
        return {p.a * m00 + p.b * m01, p.a * m10 + p.b * m11};
    }
    int det() const { return m00 * m11 - m01 * m10; }
    Transform compose(const Transform& o) const {
        // this ∘ o: apply o first.
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }
};

inline Transform transform_identity() { return {1, 0, 0, 1}; }

// Rotation by 60 degrees counterclockwise: e1 -> e2, e2 -> e2 - e1.
inline Transform transform_r60() { return {0, -1, 1, 1}; }

// Reflection swapping e1 and e2 (the mirror across their bisector).
inline Transform transform_mirror() { return {0, 1, 1, 0}; }

// All twelve symmetries: R60^k and R60^k ∘ M for k = 0..5.
inline const std::array<Transform, 12>& point_group() {
    static const std::array<Transform, 12> g = [] {
        std::array<Transform, 12> out{};
        Transform r = transform_identity();
        for (int k = 0; k < 6; ++k) {
            out[k] = r;
            out[6 + k] = r.compose(transform_mirror());
            r = transform_r60().compose(r);
        }
        return out;
    }();
    return g;
}

} // namespace tritile

#endif
