// SPDX-License-Identifier: MIT
//
// Exhaustive tiling search.  The region is scaled to an integer grid of
// unit up and down cells and scanned row by row, bottom to top, left to
// right, up cell before down cell.  At the first uncovered cell the
// covering tile is forced up to its size: an uncovered up cell can only
// be the anchor cell of an up tile, and an uncovered down cell can only
// be the lowest-leftmost cell of a down tile, because any other
// covering tile would also cover an earlier cell.  Branching over the
// size alone therefore enumerates every tiling exactly once.

#pragma once

#include "tritile/tiling.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <vector>

namespace tritile {

struct SearchBudget {
    long long max_nodes = -1; // negative: unlimited
    double max_seconds = -1;  // negative: unlimited
};

struct CoverOptions {
    // Exact multiset of tile sizes to place; leave empty for bounded
    // mode, which allows every size up to max_size that is a whole
    // multiple of the region's grid step, and up to max_tiles tiles.
    std::vector<ExactScalar> multiset;
    long long max_size = 0;
    long long max_tiles = 0;
    bool t_perfect_only = false;
    long long max_results = -1; // negative: all
    SearchBudget budget;
    // Optional final filter applied to each complete tiling.
    std::function<bool(const Tiling&)> accept;
    // Optional partition of the root branches: called with 0, 1, 2, ...
    // for the candidate placements at the first cell, in order; a
    // branch is explored only when the filter returns true.  Running
    // the same search once per partition class visits every branch
    // exactly once, which is how work is split across workers.
    std::function<bool(long long)> branch_filter;
};

struct SearchResult {
    std::vector<Tiling> tilings;
    // False when a node or time budget truncated the search or the
    // result cap was reached; counts are then lower bounds.
    bool complete = true;
    long long nodes = 0;
};

namespace detail {

// Budget left after spending the given nodes and seconds.
inline SearchBudget remaining_budget(const SearchBudget& total, long long nodes_spent,
                                     double seconds_spent, bool& exhausted) {
    SearchBudget left;
    exhausted = false;
    if (total.max_nodes >= 0) {
        left.max_nodes = total.max_nodes - nodes_spent;
        if (left.max_nodes <= 0) {
            left.max_nodes = 0;
            exhausted = true;
        }
    }
    if (total.max_seconds >= 0) {
        left.max_seconds = total.max_seconds - seconds_spent;
        if (left.max_seconds <= 0) {
            left.max_seconds = 0;
            exhausted = true;
        }
    }
    return left;
}

struct GridRow {
    std::int64_t up_lo = 0, up_hi = 0, dn_lo = 0, dn_hi = 0;
    std::size_t up_off = 0, dn_off = 0;
};

// Scan position: absolute row, column, and cell parity within the
// column (up first).
struct ScanPos {
    std::int64_t row = 0, col = 0;
    bool up_phase = true;
};

class CoverSearch {
  public:
    CoverSearch(const ConvexLatticePolygon& region, const CoverOptions& opt)
        : region_(region), opt_(opt) {
        scale_ = 1;
        for (const auto& v : region.vertices()) {
            scale_ = exact_lcm(scale_, exact_den(v.a));
            scale_ = exact_lcm(scale_, exact_den(v.b));
        }
        for (const auto& s : opt.multiset) scale_ = exact_lcm(scale_, exact_den(s));
        sr_ = scale_region(region, scale_);
        rows_.resize(static_cast<std::size_t>(sr_.bp - sr_.bm));
        std::size_t off = 0;
        for (std::int64_t r = sr_.bm; r < sr_.bp; ++r) {
            GridRow& row = rows_[static_cast<std::size_t>(r - sr_.bm)];
            auto [ulo, uhi] = sr_.up_cols(r);
            auto [dlo, dhi] = sr_.down_cols(r);
            row.up_lo = ulo;
            row.up_hi = std::max(ulo, uhi);
            row.dn_lo = dlo;
            row.dn_hi = std::max(dlo, dhi);
            row.up_off = off;
            off += static_cast<std::size_t>(row.up_hi - row.up_lo);
            row.dn_off = off;
            off += static_cast<std::size_t>(row.dn_hi - row.dn_lo);
        }
        covered_.assign(off, 0);
        uncovered_ = static_cast<long long>(off);

        if (!opt.multiset.empty()) {
            std::map<std::int64_t, int> counts;
            long long area = 0;
            for (const auto& s : opt.multiset) {
                std::int64_t v = to_i64(exact_num(s * scale_));
                ++counts[v];
                area += static_cast<long long>(v) * v;
            }
            area_matches_ = (area == uncovered_);
            for (const auto& [s, c] : counts) {
                sizes_.push_back(s);
                left_.push_back(c);
            }
        } else {
            area_matches_ = true;
            std::int64_t hi = opt.max_size * to_i64(scale_);
            for (std::int64_t s = 1; s <= hi; ++s) sizes_.push_back(s);
        }
        used_up_.assign(sizes_.size(), 0);
        used_dn_.assign(sizes_.size(), 0);
        start_ = std::chrono::steady_clock::now();
    }

    SearchResult run() {
        SearchResult out;
        if (!area_matches_) return out;
        const GridRow& first = row(sr_.bm);
        ScanPos pos{sr_.bm, std::min(first.up_lo, first.dn_lo), true};
        dfs(pos, 0);
        out.tilings = std::move(found_);
        out.complete = complete_ && !stopped_;
        out.nodes = nodes_;
        return out;
    }

  private:
    const GridRow& row(std::int64_t r) const {
        return rows_[static_cast<std::size_t>(r - sr_.bm)];
    }
    std::size_t up_id(std::int64_t r, std::int64_t a) const {
        const GridRow& g = row(r);
        return g.up_off + static_cast<std::size_t>(a - g.up_lo);
    }
    std::size_t dn_id(std::int64_t r, std::int64_t a) const {
        const GridRow& g = row(r);
        return g.dn_off + static_cast<std::size_t>(a - g.dn_lo);
    }

    // Advance to the first uncovered cell at or after pos.
    bool next_uncovered(ScanPos& pos) const {
        std::int64_t r = pos.row;
        std::int64_t a = pos.col;
        bool up = pos.up_phase;
        for (; r < sr_.bp; ++r) {
            const GridRow& g = row(r);
            std::int64_t hi = std::max(g.up_hi, g.dn_hi);
            for (; a < hi; ++a, up = true) {
                if (up && a >= g.up_lo && a < g.up_hi && !covered_[up_id(r, a)]) {
                    pos = {r, a, true};
                    return true;
                }
                up = false;
                if (a >= g.dn_lo && a < g.dn_hi && !covered_[dn_id(r, a)]) {
                    pos = {r, a, false};
                    return true;
                }
            }
            if (r + 1 < sr_.bp) {
                const GridRow& gn = row(r + 1);
                a = std::min(gn.up_lo, gn.dn_lo);
                up = true;
            }
        }
        return false;
    }

    // Mark or unmark the cells of a tile; in mark mode, fail and roll
    // back when a cell is missing from the region or already covered.
    bool apply(const ScaledTile& t, bool mark) {
        auto [r0, r1] = tile_rows(t);
        if (r0 < sr_.bm || r1 > sr_.bp) return false;
        for (std::int64_t r = r0; r < r1; ++r) {
            const GridRow& g = row(r);
            auto [ulo, uhi] = tile_cols(t, r, true);
            auto [dlo, dhi] = tile_cols(t, r, false);
            if (ulo < uhi && (ulo < g.up_lo || uhi > g.up_hi)) return mark ? rollback(t, r0, r) : false;
            if (dlo < dhi && (dlo < g.dn_lo || dhi > g.dn_hi)) return mark ? rollback(t, r0, r) : false;
            for (std::int64_t a = ulo; a < uhi; ++a) {
                std::size_t id = up_id(r, a);
                if (mark) {
                    if (covered_[id]) return rollback(t, r0, r, a, true);
                    covered_[id] = 1;
                } else {
                    covered_[id] = 0;
                }
            }
            for (std::int64_t a = dlo; a < dhi; ++a) {
                std::size_t id = dn_id(r, a);
                if (mark) {
                    if (covered_[id]) return rollback(t, r0, r, a, false);
                    covered_[id] = 1;
                } else {
                    covered_[id] = 0;
                }
            }
        }
        return true;
    }

    // Undo a partially applied mark: clear full rows [r0, r_bad) plus
    // the prefix of row r_bad up to the failing cell.
    bool rollback(const ScaledTile& t, std::int64_t r0, std::int64_t r_bad,
                  std::int64_t a_bad = -1, bool bad_up = true) {
        for (std::int64_t r = r0; r <= r_bad; ++r) {
            auto [ulo, uhi] = tile_cols(t, r, true);
            auto [dlo, dhi] = tile_cols(t, r, false);
            if (r == r_bad) {
                if (a_bad < 0) break; // interval check failed, nothing marked in this row
                if (bad_up) {
                    uhi = a_bad;
                    dlo = dhi; // down cells of this row not reached yet
                } else {
                    dhi = a_bad; // up cells of this row fully marked
                }
            }
            for (std::int64_t a = ulo; a < uhi; ++a) covered_[up_id(r, a)] = 0;
            for (std::int64_t a = dlo; a < dhi; ++a) covered_[dn_id(r, a)] = 0;
        }
        return false;
    }

    bool over_budget() {
        if (opt_.budget.max_nodes >= 0 && nodes_ > opt_.budget.max_nodes) return true;
        if (opt_.budget.max_seconds >= 0 && (nodes_ & 1023) == 0) {
            double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                             .count();
            if (sec > opt_.budget.max_seconds) return true;
        }
        return false;
    }

    void emit() {
        std::vector<Tile> tiles;
        tiles.reserve(placed_.size());
        ExactScalar inv = ExactScalar(1) / ExactScalar(scale_);
        for (const auto& t : placed_) {
            tiles.emplace_back(t.up ? Orientation::Up : Orientation::Down,
                               LatticePoint{ExactScalar(t.x) * inv, ExactScalar(t.y) * inv},
                               ExactScalar(t.s) * inv);
        }
        Tiling full(region_, tiles);
        if (opt_.accept && !opt_.accept(full)) return;
        found_.push_back(std::move(full));
        if (opt_.max_results >= 0 && static_cast<long long>(found_.size()) >= opt_.max_results)
            stopped_ = true;
    }

    void dfs(ScanPos pos, int depth) {
        if (stopped_) return;
        ++nodes_;
        if (over_budget()) {
            complete_ = false;
            stopped_ = true;
            return;
        }
        if (!next_uncovered(pos)) {
            bool all_used = opt_.multiset.empty();
            if (!all_used) {
                all_used = true;
                for (int c : left_)
                    if (c != 0) all_used = false;
            }
            if (all_used) emit();
            return;
        }
        long long placed_count = static_cast<long long>(placed_.size());
        if (opt_.multiset.empty()) {
            if (placed_count >= opt_.max_tiles) return;
            long long cap = opt_.max_size * to_i64(scale_);
            if (uncovered_ > (opt_.max_tiles - placed_count) * cap * cap) return;
        }
        for (std::size_t i = 0; i < sizes_.size(); ++i) {
            if (!opt_.multiset.empty() && left_[i] == 0) continue;
            std::int64_t s = sizes_[i];
            ScaledTile t;
            if (pos.up_phase)
                t = {pos.col, pos.row, s, true};
            else
                t = {pos.col + 1 - s, pos.row + s, s, false};
            std::vector<int>& used = t.up ? used_up_ : used_dn_;
            if (opt_.t_perfect_only && used[i]) continue;
            if (depth == 0 && opt_.branch_filter && !opt_.branch_filter(top_branch_++)) continue;
            if (!apply(t, true)) continue;
            uncovered_ -= s * s;
            placed_.push_back(t);
            if (!opt_.multiset.empty()) --left_[i];
            used[i] += 1;
            dfs(pos, depth + 1);
            used[i] -= 1;
            if (!opt_.multiset.empty()) ++left_[i];
            placed_.pop_back();
            uncovered_ += s * s;
            apply(t, false);
            if (stopped_) return;
        }
    }

    ConvexLatticePolygon region_;
    CoverOptions opt_;
    Int scale_;
    ScaledRegion sr_;
    std::vector<GridRow> rows_;
    std::vector<char> covered_;
    long long uncovered_ = 0;
    bool area_matches_ = false;
    std::vector<std::int64_t> sizes_;
    std::vector<int> left_;
    std::vector<int> used_up_, used_dn_;
    std::vector<ScaledTile> placed_;
    std::vector<Tiling> found_;
    long long top_branch_ = 0;
    long long nodes_ = 0;
    bool complete_ = true;
    bool stopped_ = false;
    std::chrono::steady_clock::time_point start_;
};

} // namespace detail

// Every tiling of the region subject to the options, in deterministic
// scan order.
inline SearchResult cover_region(const ConvexLatticePolygon& region, const CoverOptions& opt) {
    return detail::CoverSearch(region, opt).run();
}

} // namespace tritile
