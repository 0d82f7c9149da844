#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "ra/error.hpp"

namespace ra {

// Exact coefficient field for everything the identities are tested on.
// cpp_rational keeps values in lowest terms with a positive denominator,
// which is exactly the canonical form the serialization relies on.
using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "num/den", integers without the "/1" ("-3/7", "5", "0").
inline std::string to_string(const Rational& r) { return r.str(); }

/// Parses the serialized form back; throws ParseError on anything else
/// (including a zero denominator).
inline Rational rational_from_string(std::string_view s) {
    try {
        return Rational(std::string(s));
    } catch (const std::exception&) {
        fail("ParseError", "not a rational: \"" + std::string(s) + "\"");
    }
}

/// Lossy conversion for the numeric (amoeba/asymptotics) side.  Handles
/// values whose numerator/denominator exceed double range individually.
inline double to_double(const Rational& r) {
    if (r == 0) return 0.0;
    const bool neg = r < 0;
    const BigInt num = abs(numerator(r)), den = denominator(r);
    const long nb = static_cast<long>(msb(num));
    const long db = static_cast<long>(msb(den));
    double v;
    if (nb < 900 && db < 900) {
        v = num.convert_to<double>() / den.convert_to<double>();
    } else {
        // scale both sides into double range; only the quotient matters
        const long shift = std::max(nb, db) - 512;
        v = BigInt(num >> shift).convert_to<double>() / BigInt(den >> shift).convert_to<double>();
    }
    return neg ? -v : v;
}

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

} // namespace ra
