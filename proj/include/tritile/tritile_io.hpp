// SPDX-License-Identifier: MIT
//
// The .tritile text format.
//
//   tritile 1
//   # optional comment lines
//   P <a> <b>              region vertices, counterclockwise
//   T <U|D> <a> <b> <size> tiles
//
// Numbers are reduced rationals (`p` or `p/q`).  The canonical form
// starts the region at its least vertex in (b, a) order and sorts the
// tiles by (anchor b, anchor a, orientation, size); serialization
// always emits the canonical form, so writing what was parsed
// reproduces a canonical file byte for byte.

#ifndef TRITILE_TRITILE_IO_HPP
#define TRITILE_TRITILE_IO_HPP

#include "tiling.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace tritile {

inline std::string to_text(const Tiling& t, const std::vector<std::string>& comments = {}) {
    std::ostringstream os;
    os << "tritile 1\n";
    for (const auto& c : comments) os << "# " << c << "\n";
    const auto& reg = t.region();
    int m = reg.vertex_count(), start = reg.canonical_start();
    for (int i = 0; i < m; ++i) {
        const auto& v = reg.vertex(start + i);
        os << "P " << exact_str(v.a) << " " << exact_str(v.b) << "\n";
    }
    for (const auto& tl : t.tiles()) {
        os << "T " << (tl.orient == Orientation::Up ? "U" : "D") << " "
           << exact_str(tl.anchor.a) << " " << exact_str(tl.anchor.b) << " "
           << exact_str(tl.size) << "\n";
    }
    return os.str();
}

inline Tiling from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> Error {
        return Error("SyntaxError", "line " + std::to_string(lineno) + ": " + msg);
    };

    if (!std::getline(is, line)) throw Error("SyntaxError", "empty input");
    lineno = 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "tritile 1") throw fail("expected header 'tritile 1'");

    std::vector<LatticePoint> verts;
    std::vector<Tile> tiles;
    while (std::getline(is, line)) {
        ++lineno;
        // Strip trailing carriage return from files with CRLF endings.
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string w;
        while (ls >> w) tok.push_back(w);
        try {
            if (tok[0] == "P") {
                if (tok.size() != 3) throw fail("P expects 2 fields");
                verts.push_back({parse_exact(tok[1]), parse_exact(tok[2])});
            } else if (tok[0] == "T") {
                if (tok.size() != 5) throw fail("T expects 4 fields");
                Orientation o;
                if (tok[1] == "U") o = Orientation::Up;
                else if (tok[1] == "D") o = Orientation::Down;
                else throw fail("orientation must be U or D");
                ExactScalar size = parse_exact(tok[4]);
                if (size <= 0) throw fail("tile size must be positive");
                tiles.emplace_back(o, LatticePoint{parse_exact(tok[2]), parse_exact(tok[3])},
                                   size);
            } else {
                throw fail("unknown record '" + tok[0] + "'");
            }
        } catch (const Error& e) {
            if (e.code == "SyntaxError" && std::string(e.what()).rfind("line ", 0) == 0) throw;
            throw fail(e.what());
        }
    }
    if (verts.size() < 3) throw Error("SyntaxError", "no region in input");
    try {
        return Tiling(ConvexLatticePolygon(verts), tiles);
    } catch (const Error& e) {
        throw Error("SyntaxError", std::string("invalid region or tiles: ") + e.what());
    }
}

inline Tiling read_tritile(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("IoError", "cannot open " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return from_text(buf.str());
}

inline void write_tritile(const std::string& path, const Tiling& t,
                          const std::vector<std::string>& comments = {}) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("IoError", "cannot write " + path);
    f << to_text(t, comments);
}

} // namespace tritile

#endif
