#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fareykit/farey_metric.hpp"
#include "fareykit/slope.hpp"

namespace fareykit {

/// A covering map between tori, lifted to R^2 as an integer matrix acting on
/// column vectors (x, y). The degree is |det|.
class CoverMap {
public:
    /// Throws BadMatrix when det = 0.
    CoverMap(Integer a, Integer b, Integer c, Integer d);

    const Integer& a() const noexcept { return a_; }
    const Integer& b() const noexcept { return b_; }
    const Integer& c() const noexcept { return c_; }
    const Integer& d() const noexcept { return d_; }
    const Integer& degree() const noexcept { return degree_; }

    friend bool operator==(const CoverMap&, const CoverMap&) = default;

private:
    Integer a_, b_, c_, d_;
    Integer degree_;
};

std::string to_string(const CoverMap& c);

/// Parses "a,b,c,d" (row-major).
CoverMap parse_cover_matrix(std::string_view text);

/// Downstairs slope: the primitive vector on the line through M v.
Slope pushforward_slope(const CoverMap& c, const Slope& s);

/// Upstairs slope: the primitive vector on the line through adj(M) w.
/// Inverse of pushforward_slope.
Slope pullback_slope(const CoverMap& c, const Slope& s);

struct PairAudit {
    Slope upstairs_a, upstairs_b;
    Slope downstairs_a, downstairs_b;
    std::uint64_t upstairs_distance = 0;
    std::uint64_t downstairs_distance = 0;
    bool stable = true;
};

struct LipschitzAudit {
    Integer degree;
    /// 2*log2(degree) for degree >= 2; 1 for degree 1, where the correspondence
    /// is a graph isomorphism.
    double constant = 0.0;
    double max_forward_ratio = 0.0;   // d_down / d_up
    double max_backward_ratio = 0.0;  // d_up / d_down
    bool forward_within_bound = true;
    bool backward_within_bound = true;
    bool all_stable = true;
    std::size_t pairs_checked = 0;
    /// Pairs where either direction exceeds the constant.
    std::vector<PairAudit> violations;
    /// A pair realizing each maximum, when any pair of distinct slopes was seen.
    std::vector<PairAudit> extremal;
};

/// Exact check of d_image <= L(degree) * d_source, with L as in
/// LipschitzAudit::constant. Compares 2^d_image against degree^(2 d_source).
bool within_lipschitz_bound(const Integer& degree, std::uint64_t d_source, std::uint64_t d_image);

/// Audits the upstairs pairs against their downstairs images with oracle
/// distances. Never mutates its inputs. Throws Unstable.
LipschitzAudit lipschitz_audit(const CoverMap& c, const std::vector<std::pair<Slope, Slope>>& pairs,
                               const OracleOptions& options = {});

/// Every unordered pair of distinct canonical slopes with entries <= bound.
std::vector<std::pair<Slope, Slope>> all_pairs_within(std::int64_t entry_bound);

/// Canonical slopes with entries <= bound, in canonical order.
std::vector<Slope> slopes_within(std::int64_t entry_bound);

}  // namespace fareykit
