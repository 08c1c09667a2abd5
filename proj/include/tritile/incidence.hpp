// SPDX-License-Identifier: MIT
//
// Bipartite incidence graph of a tiling: one white node per tile at
// its centroid, one black node per tiling vertex that is not a sharp
// region corner, and an edge whenever the black point is a vertex of
// the white's tile.  Edges around every node are ordered by angle,
// which makes the graph a plane graph whose faces can be traced, and
// the face statistics relate tile adjacencies to vertex defects.

#pragma once

#include "tritile/tiling.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace tritile {

struct Gamma {
    // Node positions; white nodes come first, one per tile, in tile
    // order, then black nodes.
    std::vector<LatticePoint> pos;
    int whites = 0;
    // Adjacency lists sorted counterclockwise by direction.
    std::vector<std::vector<int>> adj;
};

inline Gamma build_gamma(const Tiling& t) {
    if (t.tile_count() < 2) throw Error("TooFewTiles", "incidence graph needs at least 2 tiles");
    Gamma g;
    g.whites = t.tile_count();
    for (const auto& tile : t.tiles()) g.pos.push_back(tile_centroid(tile));

    auto classes = classify_vertices(t);
    std::map<LatticePoint, int, LexBaLess> black_id;
    for (const auto& [v, cls] : classes) {
        if (cls == VertexClass::ThirdPi) continue;
        black_id.emplace(v, static_cast<int>(g.pos.size()));
        g.pos.push_back(v);
    }

    g.adj.resize(g.pos.size());
    for (int i = 0; i < t.tile_count(); ++i) {
        for (const auto& v : tile_vertices(t.tiles()[i])) {
            auto it = black_id.find(v);
            if (it == black_id.end()) continue;
            g.adj[i].push_back(it->second);
            g.adj[it->second].push_back(i);
        }
    }
    for (size_t u = 0; u < g.adj.size(); ++u) {
        std::sort(g.adj[u].begin(), g.adj[u].end(), [&](int x, int y) {
            return angle_less(g.pos[x] - g.pos[u], g.pos[y] - g.pos[u]);
        });
    }
    return g;
}

struct GammaCensus {
    long long v = 0, e = 0, f = 0;
    long long whites = 0, blacks = 0;
    long long v2 = 0, v3 = 0, v6 = 0;
    long long components = 0;
    // Total length of the outer face of every component.
    long long outer_len = 0;
    // Quadrilateral faces, first including outer faces, then bounded only.
    long long f4_total = 0;
    long long f4_bounded = 0;
    std::map<long long, long long> face_sizes; // histogram, outer included
    long long pairs = 0;                       // tile pairs sharing a full side
    long long v_pi = 0;
    long long m = 0; // region side count
};

// Number of unordered tile pairs whose boundaries share a full side of
// both tiles.
inline long long side_sharing_pairs(const Tiling& t) {
    using Seg = std::pair<LatticePoint, LatticePoint>;
    auto seg_less = [](const Seg& s1, const Seg& s2) {
        if (lex_ba_less(s1.first, s2.first)) return true;
        if (lex_ba_less(s2.first, s1.first)) return false;
        return lex_ba_less(s1.second, s2.second);
    };
    std::map<Seg, int, decltype(seg_less)> count(seg_less);
    for (const auto& tile : t.tiles()) {
        auto vs = tile_vertices(tile);
        for (int i = 0; i < 3; ++i) {
            LatticePoint p = vs[i], q = vs[(i + 1) % 3];
            if (lex_ba_less(q, p)) std::swap(p, q);
            ++count[{p, q}];
        }
    }
    long long pairs = 0;
    for (const auto& [seg, c] : count)
        if (c == 2) ++pairs;
    return pairs;
}

inline GammaCensus gamma_census(const Tiling& t) {
    Gamma g = build_gamma(t);
    GammaCensus c;
    c.whites = g.whites;
    c.blacks = static_cast<long long>(g.pos.size()) - g.whites;
    c.v = static_cast<long long>(g.pos.size());
    c.m = t.region().vertex_count();
    for (const auto& [v, cls] : classify_vertices(t))
        if (cls == VertexClass::Pi) ++c.v_pi;

    for (size_t u = 0; u < g.adj.size(); ++u) {
        size_t d = g.adj[u].size();
        c.e += static_cast<long long>(d);
        if (d == 2)
            ++c.v2;
        else if (d == 3)
            ++c.v3;
        else if (d == 6)
            ++c.v6;
        else
            throw Error("DegreeInvariantViolation",
                        "node of degree " + std::to_string(d));
        if (static_cast<int>(u) < g.whites && d > 3)
            throw Error("DegreeInvariantViolation", "white node of degree " + std::to_string(d));
    }
    c.e /= 2;

    // Components.
    std::vector<int> comp(g.pos.size(), -1);
    for (size_t s = 0; s < g.pos.size(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = static_cast<int>(c.components);
        std::vector<size_t> stack{s};
        while (!stack.empty()) {
            size_t u = stack.back();
            stack.pop_back();
            for (int w : g.adj[u])
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    stack.push_back(static_cast<size_t>(w));
                }
        }
        ++c.components;
    }

    // Face tracing.  The successor of dart (u, v) is (v, w) where w
    // precedes u in the counterclockwise order at v; bounded faces then
    // come out counterclockwise (positive signed area) and each outer
    // face clockwise (negative).
    std::vector<size_t> offset(g.pos.size() + 1, 0);
    for (size_t u = 0; u < g.pos.size(); ++u) offset[u + 1] = offset[u] + g.adj[u].size();
    auto dart_id = [&](int u, int v) {
        const auto& a = g.adj[u];
        size_t k = std::find(a.begin(), a.end(), v) - a.begin();
        return offset[u] + k;
    };
    std::vector<char> seen(2 * c.e, 0);
    for (size_t u = 0; u < g.pos.size(); ++u) {
        for (int v0 : g.adj[u]) {
            size_t d0 = dart_id(static_cast<int>(u), v0);
            if (seen[d0]) continue;
            long long len = 0;
            ExactScalar area2 = 0;
            int cu = static_cast<int>(u), cv = v0;
            size_t d = d0;
            do {
                seen[d] = 1;
                ++len;
                area2 += cross_value(g.pos[cu], g.pos[cv]);
                const auto& av = g.adj[cv];
                size_t k = std::find(av.begin(), av.end(), cu) - av.begin();
                int w = av[(k + av.size() - 1) % av.size()];
                cu = cv;
                cv = w;
                d = dart_id(cu, cv);
            } while (d != d0);
            ++c.f;
            ++c.face_sizes[len];
            bool outer = area2 < 0;
            if (outer) c.outer_len += len;
            if (len == 4) {
                ++c.f4_total;
                if (!outer) ++c.f4_bounded;
            }
        }
    }

    c.pairs = side_sharing_pairs(t);
    return c;
}

struct PairBound {
    long long pairs = 0;
    long long f4_bounded = 0;
    long long lower = 0; // m + v_pi - 3
    bool equality = false;
};

// Checks every structural identity of the census and the adjacency
// bounds; throws on any violation and returns the margins otherwise.
inline PairBound check_gamma(const Tiling& t, GammaCensus* out = nullptr) {
    GammaCensus c = gamma_census(t);
    auto fail = [&](const std::string& what) -> Error {
        return Error("InvariantViolation", "incidence census: " + what);
    };
    if (c.v2 != c.m) throw fail("degree-2 count != region side count");
    if (2 * c.e != 2 * c.v2 + 3 * c.v3 + 6 * c.v6) throw fail("degree sum mismatch");
    long long size_sum = 0;
    for (const auto& [len, cnt] : c.face_sizes) size_sum += len * cnt;
    if (size_sum != 2 * c.e) throw fail("face size sum != dart count");
    if (c.v - c.e + c.f != 2 * c.components) throw fail("Euler characteristic mismatch");
    if (c.outer_len != 2 * (2 * c.m - 6 + c.v_pi)) throw fail("outer face length mismatch");
    long long expect_f4 = 6 - c.m + 3 * c.v6;
    for (const auto& [len, cnt] : c.face_sizes)
        if (len >= 6) expect_f4 += (len / 2 - 3) * cnt;
    if (c.f4_total != expect_f4) throw fail("quad face count mismatch");
    if (c.f4_bounded > c.pairs) throw fail("bounded quad faces exceed side-sharing pairs");
    if (c.pairs < c.m + c.v_pi - 3) throw fail("side-sharing pairs below lower bound");
    if (out) *out = c;
    PairBound b;
    b.pairs = c.pairs;
    b.f4_bounded = c.f4_bounded;
    b.lower = c.m + c.v_pi - 3;
    b.equality = (c.f4_bounded == c.pairs);
    return b;
}

} // namespace tritile
