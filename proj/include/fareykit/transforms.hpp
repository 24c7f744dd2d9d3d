#pragma once

#include <string>

#include "fareykit/slope.hpp"

namespace fareykit {

/// An integer 2x2 matrix with determinant +-1 acting on column vectors (x, y).
/// The action on slopes is the matrix product followed by canonicalization.
class UnimodularMap {
public:
    /// Throws BadMatrix unless |ad - bc| = 1.
    UnimodularMap(Integer a, Integer b, Integer c, Integer d);

    static UnimodularMap identity() { return {1, 0, 0, 1}; }

    const Integer& a() const noexcept { return a_; }
    const Integer& b() const noexcept { return b_; }
    const Integer& c() const noexcept { return c_; }
    const Integer& d() const noexcept { return d_; }
    Integer determinant() const { return a_ * d_ - b_ * c_; }

    Vec2 apply(const Vec2& v) const { return {a_ * v.x + b_ * v.y, c_ * v.x + d_ * v.y}; }

    UnimodularMap inverse() const;
    /// Any integer power; negative powers use the inverse.
    UnimodularMap power(long long n) const;

    /// (f * g)(v) = f(g(v)).
    friend UnimodularMap operator*(const UnimodularMap& f, const UnimodularMap& g);
    friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;

private:
    Integer a_, b_, c_, d_;
};

std::string to_string(const UnimodularMap& m);

/// The twist about alpha: v -> v + i(v, g) g with g the canonical vector of
/// alpha and i(v, g) = v.x*g.y - v.y*g.x. Fixes alpha; sends p/q to p/q + 1
/// when alpha = 1/0.
UnimodularMap twist_map(const Slope& alpha);

Slope apply_map(const UnimodularMap& m, const Slope& s);

/// p/q -> -p/q. The reflection in the edge from 0/1 to 1/0, fixing both.
Slope reflect(const Slope& s);
UnimodularMap reflection_map();

/**
 * The four homology actions a self-diffeomorphism can induce on a cusp,
 * written on (p, q):
 *   1: identity   2: (-p, -q)   3: (-p, q)   4: (p, -q)
 * Cases 1-2 fix every slope; cases 3-4 act as reflect. Throws BadCase.
 */
UnimodularMap mcg_case_map(int which);

}  // namespace fareykit
