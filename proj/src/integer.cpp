#include "fareykit/integer.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "fareykit/error.hpp"

namespace fareykit {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::Unstable: return "Unstable";
    case ErrorKind::BadCase: return "BadCase";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::OracleDomain: return "OracleDomain";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::MissingVolume: return "MissingVolume";
    case ErrorKind::DepthExceeded: return "DepthExceeded";
    case ErrorKind::BadMatrix: return "BadMatrix";
    case ErrorKind::EntryBoundTooLarge: return "EntryBoundTooLarge";
    }
    return "Unknown";
}

Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(abs(a), abs(b));
}

Integer floor_div(const Integer& num, const Integer& den) {
    Integer q = num / den;  // truncates toward zero
    Integer r = num - q * den;
    if (r != 0 && ((r < 0) != (den < 0))) {
        --q;
    }
    return q;
}

Bezout extended_gcd(const Integer& a, const Integer& b) {
    Integer old_r = a, r = b;
    Integer old_s = 1, s = 0;
    Integer old_t = 0, t = 1;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

std::optional<std::int64_t> to_int64(const Integer& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        return std::nullopt;
    }
    return v.convert_to<std::int64_t>();
}

std::string to_string(const Integer& v) { return v.str(); }

Integer parse_integer(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw Error(ErrorKind::ParseError, "malformed integer '" + std::string(text) + "'");
    }
    Integer v{std::string(s)};
    return negative ? Integer(-v) : v;
}

std::uint64_t floor_log2(const Integer& n) {
    if (n < 1) {
        throw std::domain_error("floor_log2 of non-positive value");
    }
    return static_cast<std::uint64_t>(boost::multiprecision::msb(n));
}

}  // namespace fareykit
