// SPDX-License-Identifier: MIT
//
// Exact scalar arithmetic for the tritile library.
//
// Every geometric quantity in this library is an arbitrary-precision
// rational.  Tilings may use fractional side lengths (halves and thirds
// show up in the hexagon constructions), so plain integers are not
// enough, and floating point is never acceptable: equality of
// coordinates is what the whole verification model rests on.

#ifndef TRITILE_EXACT_HPP
#define TRITILE_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tritile {

using Int = boost::multiprecision::cpp_int;
using ExactScalar = boost::multiprecision::cpp_rational;

// Error raised by every operation in this library that can fail.  The
// `code` is a stable machine-readable tag; `what()` carries detail.
struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& msg)
        : std::runtime_error(msg), code(std::move(c)) {}
};

inline Int exact_num(const ExactScalar& x) { return boost::multiprecision::numerator(x); }
inline Int exact_den(const ExactScalar& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const ExactScalar& x) { return exact_den(x) == 1; }

// Floor division of the rational toward negative infinity.
inline Int exact_floor(const ExactScalar& x) {
    Int n = exact_num(x), d = exact_den(x);
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

inline Int exact_ceil(const ExactScalar& x) {
    Int n = exact_num(x), d = exact_den(x);
    Int q = n / d;
    if (n % d != 0 && n > 0) ++q;
    return q;
}

// Renders `p` for integers and the reduced `p/q` otherwise.  This is the
// canonical text form used by the file format; keep it minimal.
inline std::string exact_str(const ExactScalar& x) {
    if (is_integer(x)) return exact_num(x).str();
    return exact_num(x).str() + "/" + exact_den(x).str();
}

// Strict parser for the canonical text form: an optional sign, digits,
// and an optional /digits suffix with a nonzero denominator.  Anything
// else (empty string, "3/", "1.5", spaces) is rejected.
inline ExactScalar parse_exact(const std::string& s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = (s[i] == '-');
        ++i;
    }
    auto read_digits = [&](Int& out) {
        std::size_t start = i;
        Int v = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
            v = v * 10 + (s[i] - '0');
            ++i;
        }
        if (i == start) throw Error("SyntaxError", "malformed rational: '" + s + "'");
        out = v;
    };
    Int num, den = 1;
    read_digits(num);
    if (i < s.size() && s[i] == '/') {
        ++i;
        read_digits(den);
        if (den == 0) throw Error("SyntaxError", "zero denominator: '" + s + "'");
    }
    if (i != s.size()) throw Error("SyntaxError", "malformed rational: '" + s + "'");
    ExactScalar r(num, den);
    return neg ? ExactScalar(-r) : r;
}

// Conversion used at the boundary between exact data and the fixed-width
// search grid.  The grid works in machine integers after all fractions
// have been scaled away; anything that does not fit is a hard error
// rather than a silent wrap.
inline std::int64_t to_i64(const Int& v) {
    static const Int lo = -(Int(1) << 62), hi = (Int(1) << 62);
    if (v < lo || v > hi) throw Error("Overflow", "value out of machine range: " + v.str());
    return v.convert_to<std::int64_t>();
}

inline Int exact_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int exact_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

} // namespace tritile

#endif
