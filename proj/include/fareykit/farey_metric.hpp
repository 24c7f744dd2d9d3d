#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fareykit/slope.hpp"
#include "fareykit/slope_set.hpp"

namespace fareykit {

enum class DistanceMethod { Oracle, Fast };

struct DistanceResult {
    std::uint64_t value = 0;
    DistanceMethod method = DistanceMethod::Oracle;
    /// Oracle: two consecutive doubled bounds agreed. Fast: always true.
    bool stable = false;
    /// Oracle: the entry bound of the last (confirming) run. Fast: 0.
    std::int64_t entry_bound = 0;

    friend bool operator==(const DistanceResult&, const DistanceResult&) = default;
};

struct GeodesicPath {
    std::vector<Slope> vertices;

    std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
    friend bool operator==(const GeodesicPath&, const GeodesicPath&) = default;
};

struct OracleOptions {
    int max_doublings = 6;
};

/// Largest entry bound a single oracle run will allocate a grid for.
inline constexpr std::int64_t kMaxOracleBound = 4096;

/**
 * Breadth-first search over the Farey graph restricted to canonical slopes
 * with |x|, |y| <= bound. Neighbours of v are the solutions w0 + k*v of
 * det(v, w) = 1 inside the box, visited in increasing k.
 */
class TruncatedFareyGraph {
public:
    explicit TruncatedFareyGraph(std::int64_t bound);

    std::int64_t bound() const noexcept { return bound_; }
    std::size_t node_count() const noexcept { return static_cast<std::size_t>((bound_ + 1) * (2 * bound_ + 1)); }

    bool contains(std::int64_t x, std::int64_t y) const noexcept;
    bool contains(const Slope& s) const;
    std::size_t index(std::int64_t x, std::int64_t y) const noexcept;
    std::size_t index(const Slope& s) const;
    Slope slope_at(std::size_t index) const;

    /// Calls visit(neighbour_index) for every neighbour of canonical (x, y).
    template <typename Visit>
    void for_each_neighbour(std::int64_t x, std::int64_t y, Visit&& visit) const;

    /// Distances from source to every node (-1 when unreachable or
    /// non-primitive). When stop_at is set, the search ends once it is popped.
    std::vector<std::int32_t> bfs(const Slope& source, std::optional<std::size_t> stop_at = std::nullopt,
                                  std::vector<std::int32_t>* predecessor = nullptr) const;

private:
    std::int64_t bound_;
};

/// Oracle distance: BFS with the entry bound doubled until two runs agree.
/// The bound is raised to cover both endpoints. Throws Unstable.
DistanceResult distance_oracle(const Slope& a, const Slope& b, const Integer& entry_bound,
                               const OracleOptions& options = {});

/// Exact fast path: change basis so b becomes 1/0, then take the shortest
/// continued fraction length of the image of a.
DistanceResult distance(const Slope& a, const Slope& b);

/// One shortest path from a to b, reconstructed from the confirming oracle
/// run. Throws Unstable.
GeodesicPath geodesic_path(const Slope& a, const Slope& b, const OracleOptions& options = {});

/**
 * Stabilized single-source distances to every slope with entries <= bound.
 * Balls of positive radius are infinite; this only ever sees a box.
 */
class OracleField {
public:
    OracleField(const Slope& source, const Integer& entry_bound, const OracleOptions& options = {});

    const Slope& source() const noexcept { return source_; }
    std::int64_t entry_bound() const noexcept { return bound_; }
    std::int64_t confirming_bound() const noexcept { return confirming_bound_; }

    /// Distance to target; nullopt when target lies outside the box.
    std::optional<std::uint64_t> distance_to(const Slope& target) const;

    /// Every slope in the box within radius, in canonical order.
    std::vector<Slope> within(std::uint64_t radius) const;

private:
    Slope source_;
    std::int64_t bound_;
    std::int64_t confirming_bound_;
    std::vector<std::int32_t> distances_;  // indexed by TruncatedFareyGraph(bound_)
};

/// All slopes at distance <= radius from center whose canonical entries are
/// <= entry_bound. A truncation: true balls of radius >= 1 are infinite.
SlopeSet enumerate_ball(const Slope& center, std::uint64_t radius, const Integer& entry_bound,
                        const OracleOptions& options = {});

/**
 * Pairwise distances among slopes. Oracle runs one stabilized BFS per
 * source; Fast evaluates each pair independently. Entry (i, j) is d(s_i, s_j).
 */
std::vector<std::vector<std::uint64_t>> pairwise_distances(std::span<const Slope> slopes, DistanceMethod method,
                                                           const OracleOptions& options = {});

/// Oracle when every entry fits comfortably in a BFS grid, Fast otherwise.
DistanceMethod preferred_method(const Integer& max_entry);

// ---------------------------------------------------------------------------

namespace detail {

std::int64_t floor_div(std::int64_t a, std::int64_t b) noexcept;
std::int64_t ceil_div(std::int64_t a, std::int64_t b) noexcept;
/// (s, t) with s*a + t*b = gcd(a, b) = 1 assumed.
std::pair<std::int64_t, std::int64_t> bezout(std::int64_t a, std::int64_t b) noexcept;

// k-range with |base + k*step| <= bound; empty range when lo > hi.
inline void clip(std::int64_t base, std::int64_t step, std::int64_t bound, std::int64_t& lo, std::int64_t& hi) noexcept {
    if (step == 0) {
        if (base > bound || base < -bound) {
            lo = 1;
            hi = 0;
        }
        return;
    }
    std::int64_t a, b;
    if (step > 0) {
        a = ceil_div(-bound - base, step);
        b = floor_div(bound - base, step);
    } else {
        a = ceil_div(bound - base, step);
        b = floor_div(-bound - base, step);
    }
    lo = std::max(lo, a);
    hi = std::min(hi, b);
}

}  // namespace detail

template <typename Visit>
void TruncatedFareyGraph::for_each_neighbour(std::int64_t x, std::int64_t y, Visit&& visit) const {
    // x*wy - y*wx = 1
    auto [s, t] = detail::bezout(x, -y);
    const std::int64_t w0x = t;
    const std::int64_t w0y = s;
    std::int64_t lo = INT64_MIN / 4;
    std::int64_t hi = INT64_MAX / 4;
    detail::clip(w0x, x, bound_, lo, hi);
    detail::clip(w0y, y, bound_, lo, hi);
    for (std::int64_t k = lo; k <= hi; ++k) {
        std::int64_t wx = w0x + k * x;
        std::int64_t wy = w0y + k * y;
        if (wx < 0 || (wx == 0 && wy < 0)) {
            wx = -wx;
            wy = -wy;
        }
        visit(index(wx, wy));
    }
}

}  // namespace fareykit
