#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fareykit {

using Integer = boost::multiprecision::cpp_int;

inline Integer abs(const Integer& v) { return v < 0 ? Integer(-v) : v; }

Integer gcd(const Integer& a, const Integer& b);

/// Floor division for any sign of numerator and denominator (den != 0).
Integer floor_div(const Integer& num, const Integer& den);

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
struct Bezout {
    Integer g, s, t;
};
Bezout extended_gcd(const Integer& a, const Integer& b);

/// Narrowing conversion; nullopt when the value does not fit.
std::optional<std::int64_t> to_int64(const Integer& v);

std::string to_string(const Integer& v);

/// Optional sign then decimal digits, surrounding whitespace allowed.
/// Throws ParseError.
Integer parse_integer(std::string_view text);

/// Largest k with 2^k <= n, for n >= 1.
std::uint64_t floor_log2(const Integer& n);

}  // namespace fareykit
