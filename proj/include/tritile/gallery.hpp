// SPDX-License-Identifier: MIT
//
// The hexagon gallery: twenty-three reference size multisets, labeled
// a through w, each of which tiles an equiangular hexagon.  A row
// records the tile count, the sizes, and whether some tiling of the
// sizes uses every size-orientation combination at most once.  The
// tilings themselves are shipped under data/hexagons/ and can be
// recomputed from the sizes alone with reconstruct_regions; rows a
// through s realize n - 4 distinct sizes with n tiles, rows t through
// w realize n - 5.

#pragma once

#include "tritile/exact.hpp"

#include <string>
#include <vector>

namespace tritile {

struct GalleryRow {
    char letter = '?';
    int n = 0;
    bool t_perfect = false;
    std::vector<long long> sizes; // ascending
};

inline const std::vector<GalleryRow>& hexagon_gallery() {
    static const std::vector<GalleryRow> rows = {
        {'a', 9, false, {1, 3, 3, 3, 4, 4, 5, 5, 6}},
        {'b', 10, false, {1, 1, 4, 4, 4, 5, 6, 6, 7, 8}},
        {'c', 11, true, {2, 2, 3, 5, 5, 7, 7, 8, 8, 9, 11}},
        {'d', 11, false, {1, 3, 4, 4, 4, 7, 7, 8, 9, 9, 10}},
        {'e', 12, false, {1, 3, 3, 4, 7, 7, 7, 10, 11, 12, 12, 13}},
        {'f', 12, false, {1, 1, 1, 2, 7, 7, 7, 9, 10, 11, 12, 14}},
        {'g', 13, false, {2, 2, 2, 4, 5, 9, 9, 11, 13, 14, 14, 15, 19}},
        {'h', 14, false, {3, 3, 3, 5, 5, 6, 11, 14, 16, 16, 17, 20, 21, 26}},
        {'i', 14, false, {2, 3, 3, 3, 6, 8, 11, 11, 14, 17, 19, 21, 21, 23}},
        {'j', 14, true, {1, 4, 5, 5, 6, 6, 11, 11, 16, 17, 20, 20, 23, 24}},
        {'k', 15, true, {1, 2, 2, 3, 3, 4, 5, 8, 8, 12, 12, 13, 15, 16, 17}},
        {'l', 16, false, {3, 5, 8, 8, 9, 11, 11, 11, 14, 22, 25, 30, 34, 34, 38, 43}},
        {'m', 17, true, {3, 3, 7, 10, 12, 13, 13, 16, 16, 19, 29, 35, 42, 47, 47, 52, 59}},
        {'n', 18, true, {2, 6, 11, 13, 13, 15, 15, 17, 17, 23, 32, 47, 55, 55, 60, 73, 78, 84}},
        {'o', 19, true,
         {2, 2, 8, 15, 17, 19, 19, 21, 23, 23, 31, 44, 63, 75, 75, 82, 99, 106, 114}},
        {'p', 21, false,
         {1, 1, 1, 2, 7, 13, 15, 16, 17, 18, 20, 20, 27, 38, 55, 65, 65, 71, 86, 92, 99}},
        {'q', 22, true,
         {8, 8, 11, 32, 33, 41, 43, 43, 49, 49, 54, 54, 57, 65, 111, 160, 165, 208, 209, 250,
          251, 283}},
        {'r', 24, false,
         {8, 8, 8, 16, 19, 56, 57, 73, 75, 75, 81, 89, 94, 94, 97, 113, 191, 280, 285, 360,
          361, 434, 435, 491}},
        {'s', 25, false,
         {11, 11, 11, 19, 19, 22, 76, 77, 96, 98, 109, 115, 115, 120, 131, 134, 153, 265, 380,
          385, 494, 495, 591, 592, 668}},
        {'t', 16, true, {2, 2, 5, 5, 7, 9, 9, 12, 21, 21, 30, 30, 33, 38, 41, 43}},
        {'u', 20, true,
         {1, 1, 4, 23, 24, 25, 25, 26, 27, 27, 31, 31, 53, 78, 84, 103, 115, 115, 127, 150}},
        {'v', 21, true,
         {1, 1, 4, 4, 31, 32, 33, 33, 34, 35, 39, 39, 43, 73, 106, 112, 139, 155, 155, 171,
          202}},
        {'w', 23, true,
         {9, 9, 11, 11, 44, 47, 47, 53, 58, 62, 62, 69, 69, 71, 80, 140, 202, 209, 264, 267,
          314, 317, 361}},
    };
    return rows;
}

inline const GalleryRow& gallery_row(char letter) {
    for (const auto& r : hexagon_gallery())
        if (r.letter == letter) return r;
    throw Error("NoGalleryRow", std::string("no gallery row '") + letter + "'");
}

// The sizes as exact scalars, ready for a multiset search.
inline std::vector<ExactScalar> gallery_sizes(const GalleryRow& row) {
    std::vector<ExactScalar> out;
    out.reserve(row.sizes.size());
    for (long long s : row.sizes) out.push_back(ExactScalar(s));
    return out;
}

} // namespace tritile
