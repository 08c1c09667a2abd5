// SPDX-License-Identifier: MIT
//
// Text serialization: canonical form, round trips, and parse errors.

#include "tritile/tritile_io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>

using namespace tritile;

namespace {

Tiling pentagon_seed() {
    ConvexLatticePolygon reg({{0, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}});
    return Tiling(reg, {Tile(Orientation::Up, {0, 0}, 2), Tile(Orientation::Down, {0, 2}, 1),
                        Tile(Orientation::Up, {1, 1}, 1), Tile(Orientation::Down, {1, 1}, 1)});
}

std::string parse_error(const std::string& text) {
    try {
        from_text(text);
        return "";
    } catch (const Error& e) {
        return std::string(e.code) + ": " + e.what();
    }
}

} // namespace

TEST_CASE("canonical text form") {
    std::string expected = "tritile 1\n"
                           "P 0 0\n"
                           "P 2 0\n"
                           "P 2 1\n"
                           "P 1 2\n"
                           "P 0 2\n"
                           "T U 0 0 2\n"
                           "T U 1 1 1\n"
                           "T D 1 1 1\n"
                           "T D 0 2 1\n";
    CHECK(to_text(pentagon_seed()) == expected);
}

TEST_CASE("region starts at its least vertex regardless of input rotation") {
    ConvexLatticePolygon reg({{2, 1}, {1, 2}, {0, 2}, {0, 0}, {2, 0}});
    Tiling t(reg, pentagon_seed().tiles());
    CHECK(to_text(t) == to_text(pentagon_seed()));
}

TEST_CASE("round trip is byte identical") {
    auto t = pentagon_seed();
    auto text = to_text(t);
    auto back = from_text(text);
    CHECK(to_text(back) == text);

    // Fractional coordinates survive.
    ConvexLatticePolygon reg(
        {{0, 0}, {ExactScalar(3, 2), 0}, {ExactScalar(3, 2), ExactScalar(3, 2)}, {0, ExactScalar(3, 2)}});
    Tiling frac(reg, {Tile(Orientation::Up, {0, 0}, ExactScalar(3, 2)),
                      Tile(Orientation::Down, {0, ExactScalar(3, 2)}, ExactScalar(3, 2))});
    auto ftext = to_text(frac);
    CHECK(ftext.find("3/2") != std::string::npos);
    CHECK(to_text(from_text(ftext)) == ftext);
}

TEST_CASE("comments and blank lines are tolerated, CRLF stripped") {
    std::string text = "tritile 1\r\n"
                       "# a comment\r\n"
                       "\r\n"
                       "P 0 0\r\n"
                       "P 1 0\r\n"
                       "# interleaved\r\n"
                       "P 1 1\r\n"
                       "P 0 1\r\n"
                       "T U 0 0 1\r\n"
                       "T D 0 1 1\r\n";
    auto t = from_text(text);
    CHECK(t.tile_count() == 2);
    CHECK(verify(t).valid);
}

TEST_CASE("comment helper embeds after the header") {
    auto text = to_text(pentagon_seed(), {"first", "second"});
    CHECK(text.find("tritile 1\n# first\n# second\nP 0 0\n") == 0);
    auto back = from_text(text);
    CHECK(to_text(back) == to_text(pentagon_seed()));
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(parse_error("").find("SyntaxError") == 0);
    CHECK(parse_error("nonsense\n").find("line 1") != std::string::npos);
    CHECK(parse_error("tritile 2\n").find("line 1") != std::string::npos);
    std::string good = to_text(pentagon_seed());

    // Break one tile line and check the reported line number.
    std::string bad = good;
    auto pos = bad.find("T U 1 1 1");
    bad.replace(pos, 9, "T X 1 1 1");
    auto msg = parse_error(bad);
    CHECK(msg.find("SyntaxError") == 0);
    CHECK(msg.find("line 8") != std::string::npos);

    CHECK(parse_error("tritile 1\nP 0 0\nP 1 0\nP 1 1\nP 0 1\nT U 0 0\n").find("line 6") !=
          std::string::npos);
    CHECK(parse_error("tritile 1\nP 0 0\nP 1 0\nP 1 1\nP 0 1\nT U 0 0 0\n").find("SyntaxError") == 0);
    CHECK(parse_error("tritile 1\nP 0 0\nP 1 0\nT U 0 0 1\n").find("SyntaxError") == 0);
    CHECK(parse_error("tritile 1\nP 0 0\nP 1 0\nP 1 1\nP 0 1\nT U 0 0 1/\n").find("SyntaxError") == 0);

    // Geometric nonsense surfaces as a region error, not a crash.
    CHECK_FALSE(parse_error("tritile 1\nP 0 0\nP 1 1\nP 2 0\nT U 0 0 1\n").empty());
}

TEST_CASE("file round trip") {
    auto t = pentagon_seed();
    std::string path = "roundtrip_tmp.tritile";
    write_tritile(path, t);
    auto back = read_tritile(path);
    CHECK(to_text(back) == to_text(t));
    std::remove(path.c_str());
}
