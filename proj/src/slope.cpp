#include "fareykit/slope.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <utility>

namespace fareykit {

Integer det(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

Slope Slope::from_vector(const Integer& x, const Integer& y) {
    if (x == 0 && y == 0) {
        throw Error(ErrorKind::ZeroVector, "the zero vector does not define a slope");
    }
    Integer g = gcd(x, y);
    Integer cx = x / g;
    Integer cy = y / g;
    if (cx < 0 || (cx == 0 && cy < 0)) {
        cx = -cx;
        cy = -cy;
    }
    return Slope(std::move(cx), std::move(cy));
}

Integer Slope::max_entry() const {
    Integer ay = abs(y_);
    return x_ > ay ? x_ : ay;
}

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
    if (a.x_ != b.x_) {
        return a.x_ < b.x_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (a.y_ != b.y_) {
        return a.y_ < b.y_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Slope make_slope(const Integer& p, const Integer& q) { return Slope::from_vector(q, p); }

std::string to_string(const Slope& s) { return s.p().str() + "/" + s.q().str(); }

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

Integer parse_integer_field(std::string_view field, std::string_view whole) {
    try {
        return parse_integer(field);
    } catch (const Error&) {
        throw Error(ErrorKind::ParseError, "malformed slope '" + std::string(whole) + "'");
    }
}

}  // namespace

Slope parse_slope(std::string_view text) {
    std::string_view t = trim(text);
    if (t == "inf") {
        throw Error(ErrorKind::ParseError, "'inf' marks an unfilled entry, not a slope");
    }
    auto slash = t.find('/');
    if (slash == std::string_view::npos) {
        return make_slope(parse_integer_field(t, text), 1);
    }
    return make_slope(parse_integer_field(t.substr(0, slash), text), parse_integer_field(t.substr(slash + 1), text));
}

Integer intersection_number(const Slope& a, const Slope& b) { return abs(det(a.vector(), b.vector())); }

bool is_farey_edge(const Slope& a, const Slope& b) { return intersection_number(a, b) == 1; }

bool generates_h1(const Vec2& a, const Vec2& b) { return abs(det(a, b)) == 1; }

bool generates_h1(const Slope& a, const Slope& b) { return is_farey_edge(a, b); }

namespace {

// Shortest expansion length of a fraction whose class modulo 1 is r/q,
// 0 < r < q, gcd(r, q) = 1. Invariant under r -> q - r (reflection fixes 1/0)
// and under integer shifts (the twist about 1/0 fixes 1/0).
//
// At each step the first quotient is floor or ceil. Taking ceil from r/q with
// r < q/2 lands on r/(q - r): same residue, smaller denominator, and the floor
// option there has the same tail as before. Runs of such steps are skipped in
// one move, which keeps the search linear in the number of classical quotients.
class CfLength {
public:
    std::uint64_t of(const Integer& num, const Integer& den) {
        if (den == 0) {
            return 0;
        }
        if (den == 1) {
            return 1;
        }
        Integer r = num - floor_div(num, den) * den;
        return reduced(std::move(r), den);
    }

private:
    std::uint64_t reduced(Integer r, const Integer& q) {
        Integer other = q - r;
        if (other < r) {
            r = std::move(other);
        }
        if (q == 2) {
            return 2;
        }
        auto key = std::make_pair(r, q);
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        std::uint64_t via_floor = 1 + of(q, r);
        // Smallest s >= 1 with q - s*r < 3r.
        Integer s = (q - 3 * r) / r + 1;
        if (s < 1) {
            s = 1;
        }
        std::uint64_t value = via_floor;
        if (s < via_floor) {
            Integer qs = q - s * r;
            value = std::min(value, s.convert_to<std::uint64_t>() + reduced(r, qs));
        }
        memo_.emplace(std::move(key), value);
        return value;
    }

    std::map<std::pair<Integer, Integer>, std::uint64_t> memo_;
};

}  // namespace

std::uint64_t cf_min_length(const Slope& s) {
    CfLength solver;
    return solver.of(s.p(), s.q());
}

std::uint64_t cf_length_bound(const Slope& s) {
    Integer m = s.q() < 2 ? Integer(2) : s.q();
    return floor_log2(m * m) + 1;
}

double cf_raw_bound(const Slope& s) {
    if (s.q() == 0) {
        return 0.0;
    }
    return 2.0 * std::log2(s.q().convert_to<double>());
}

const Slope& FillingEntry::slope() const {
    if (!slope_) {
        throw Error(ErrorKind::IndexOutOfRange, "unfilled entry has no slope");
    }
    return *slope_;
}

std::strong_ordering operator<=>(const FillingEntry& a, const FillingEntry& b) {
    if (a.is_filled() != b.is_filled()) {
        return a.is_filled() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (!a.is_filled()) {
        return std::strong_ordering::equal;
    }
    return *a.slope_ <=> *b.slope_;
}

std::string to_string(const FillingEntry& e) { return e.is_filled() ? to_string(e.slope()) : "inf"; }

FillingEntry parse_filling_entry(std::string_view text) {
    if (trim(text) == "inf") {
        return FillingEntry::unfilled();
    }
    return FillingEntry::filled(parse_slope(text));
}

}  // namespace fareykit

std::size_t std::hash<fareykit::Slope>::operator()(const fareykit::Slope& s) const noexcept {
    std::size_t h1 = boost::multiprecision::hash_value(s.x());
    std::size_t h2 = boost::multiprecision::hash_value(s.y());
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}
