#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "fareykit/error.hpp"
#include "fareykit/integer.hpp"

namespace fareykit {

/// A raw integer vector in H1(T^2; Z). Not necessarily primitive.
struct Vec2 {
    Integer x;
    Integer y;

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// Signed determinant x1*y2 - y1*x2, the algebraic intersection of two classes.
Integer det(const Vec2& a, const Vec2& b);

/**
 * A slope on the torus: a primitive vector (x, y) up to sign.
 *
 * The vector (x, y) is displayed as the fraction p/q with p = y and q = x, so
 * (1,0) is 0/1, (0,1) is 1/0 and (2,1) is 1/2. Stored canonically: gcd 1,
 * and x > 0 or (x, y) = (0, 1).
 */
class Slope {
public:
    /// Canonicalizes an arbitrary nonzero vector. Throws ZeroVector.
    static Slope from_vector(const Integer& x, const Integer& y);
    static Slope from_vector(const Vec2& v) { return from_vector(v.x, v.y); }

    const Integer& x() const noexcept { return x_; }
    const Integer& y() const noexcept { return y_; }
    Vec2 vector() const { return {x_, y_}; }

    /// Numerator/denominator of the displayed fraction.
    const Integer& p() const noexcept { return y_; }
    const Integer& q() const noexcept { return x_; }

    bool is_infinity() const noexcept { return x_ == 0; }

    /// max(|x|, |y|), the quantity entry bounds are compared against.
    Integer max_entry() const;

    friend bool operator==(const Slope&, const Slope&) = default;
    friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);

private:
    Slope(Integer x, Integer y) : x_(std::move(x)), y_(std::move(y)) {}

    Integer x_;
    Integer y_;
};

/// The slope p/q, i.e. the class of the vector (q, p). Throws ZeroVector.
Slope make_slope(const Integer& p, const Integer& q);

std::string to_string(const Slope& s);

/// Parses "p/q" with optional signs, or a bare integer "n" meaning n/1.
Slope parse_slope(std::string_view text);

/// Geometric intersection number |det|. Zero iff a == b.
Integer intersection_number(const Slope& a, const Slope& b);

/// Adjacent in the Farey graph: the curves meet exactly once.
bool is_farey_edge(const Slope& a, const Slope& b);

/// True iff the two vectors generate Z^2. Vectors need not be primitive.
bool generates_h1(const Vec2& a, const Vec2& b);
bool generates_h1(const Slope& a, const Slope& b);

/// Length of the shortest integer continued fraction expansion of p/q,
/// searching both nearest integers at each step. 0 for 1/0.
std::uint64_t cf_min_length(const Slope& s);

/// 2*log2(max(q, 2)) + 1 rounded down: the bound on cf_min_length checked by
/// the bound audits. The raw 2*log2(|q|) is returned by cf_raw_bound.
std::uint64_t cf_length_bound(const Slope& s);
double cf_raw_bound(const Slope& s);

/// A boundary-torus entry of a multislope: either a slope to fill, or left
/// unfilled. Unfilled is distinct from every slope, including 1/0.
class FillingEntry {
public:
    static FillingEntry filled(Slope s) { return FillingEntry(std::move(s)); }
    static FillingEntry unfilled() { return FillingEntry(); }

    bool is_filled() const noexcept { return slope_.has_value(); }
    const Slope& slope() const;

    friend bool operator==(const FillingEntry&, const FillingEntry&) = default;
    /// Unfilled sorts first.
    friend std::strong_ordering operator<=>(const FillingEntry& a, const FillingEntry& b);

private:
    FillingEntry() = default;
    explicit FillingEntry(Slope s) : slope_(std::move(s)) {}

    std::optional<Slope> slope_;
};

std::string to_string(const FillingEntry& e);

/// "inf" parses as Unfilled; anything else must be a slope.
FillingEntry parse_filling_entry(std::string_view text);

}  // namespace fareykit

template <>
struct std::hash<fareykit::Slope> {
    std::size_t operator()(const fareykit::Slope& s) const noexcept;
};
