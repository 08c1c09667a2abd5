// SPDX-License-Identifier: MIT
//
// Attachment recipes: turning a gallery hexagon into a triangle,
// trapezoid, or parallelogram with every size-orientation combination
// still unique.  Each recipe names its base hexagon by gallery letter
// and lists the cap sizes to attach in order.  Every intermediate
// region is a pentagon until the last one or two caps close it up.

#pragma once

#include "tritile/tiling.hpp"

#include <string>
#include <vector>

namespace tritile {

struct AttachRecipe {
    ShapeClass target = ShapeClass::Triangle;
    int n = 0;   // tiles in the finished region
    char base = '?'; // gallery letter of the starting hexagon
    std::vector<long long> attach; // cap sizes, in attach order
};

inline const std::vector<AttachRecipe>& attach_recipes() {
    using S = ShapeClass;
    static const std::vector<AttachRecipe> rows = {
        {S::Triangle, 15, 'c', {12, 19, 20, 11}},
        {S::Triangle, 17, 'c', {12, 19, 28, 39, 20, 28}},
        {S::Triangle, 18, 'j', {27, 44, 47, 24}},
        {S::Triangle, 19, 'k', {20, 32, 33, 17}},
        {S::Triangle, 20, 'j', {27, 44, 67, 91, 47, 67}},
        {S::Triangle, 21, 'm', {64, 106, 111, 59}},
        {S::Triangle, 22, 'n', {102, 157, 162, 84}},
        {S::Triangle, 23, 'o', {138, 213, 220, 114}},
        {S::Triangle, 24, 'n', {102, 157, 235, 319, 162, 235}},
        {S::Triangle, 25, 'o', {138, 213, 319, 433, 220, 319}},
        {S::Triangle, 26, 'q', {325, 533, 534, 283}},
        {S::Triangle, 28, 'q', {325, 533, 784, 1067, 534, 784}},
        {S::Trapezoid, 14, 'c', {12, 19, 20}},
        {S::Trapezoid, 16, 'c', {12, 19, 28, 39, 20}},
        {S::Trapezoid, 17, 'j', {27, 44, 47}},
        {S::Trapezoid, 18, 'k', {20, 32, 33}},
        {S::Trapezoid, 19, 'j', {27, 44, 67, 91, 47}},
        {S::Trapezoid, 20, 'm', {64, 106, 111}},
        {S::Trapezoid, 21, 'n', {102, 157, 162}},
        {S::Trapezoid, 22, 'o', {138, 213, 220}},
        {S::Trapezoid, 23, 'n', {102, 157, 235, 319, 162}},
        {S::Trapezoid, 24, 'o', {138, 213, 319, 433, 220}},
        {S::Trapezoid, 25, 'q', {325, 533, 534}},
        {S::Trapezoid, 27, 'q', {325, 533, 784, 1067, 534}},
        {S::Parallelogram, 15, 'c', {12, 19, 28, 20}},
        {S::Parallelogram, 18, 'j', {27, 44, 67, 47}},
        {S::Parallelogram, 19, 'k', {20, 32, 48, 33}},
        {S::Parallelogram, 21, 'm', {64, 106, 158, 111}},
        {S::Parallelogram, 22, 'n', {102, 157, 235, 162}},
        {S::Parallelogram, 23, 'o', {138, 213, 319, 220}},
        {S::Parallelogram, 26, 'q', {325, 533, 784, 534}},
    };
    return rows;
}

inline const AttachRecipe& recipe_for(ShapeClass shape, int n) {
    for (const auto& r : attach_recipes())
        if (r.target == shape && r.n == n) return r;
    throw Error("NoRecipe", std::string(shape_name(shape)) + " with " + std::to_string(n) +
                                " tiles has no attachment recipe");
}

// Expected region shape after cap i of k for the given target: the
// region stays a pentagon while caps land on one sharp corner's side,
// and the last one or two caps straighten corners away.
inline ShapeClass recipe_step_shape(ShapeClass target, int i, int k) {
    if (target == ShapeClass::Triangle)
        return i < k - 2 ? ShapeClass::Pentagon
                         : (i == k - 2 ? ShapeClass::Trapezoid : ShapeClass::Triangle);
    return i < k - 1 ? ShapeClass::Pentagon : target;
}

inline Tiling recipe_build(const Tiling& base, const AttachRecipe& r) {
    Tiling t = base;
    int k = static_cast<int>(r.attach.size());
    for (int i = 0; i < k; ++i)
        t = attach_triangle(t, ExactScalar(r.attach[i]), recipe_step_shape(r.target, i, k));
    if (t.tile_count() != r.n)
        throw Error("InvariantViolation", "recipe produced the wrong tile count");
    return t;
}

} // namespace tritile
