#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fareykit/farey_metric.hpp"
#include "fareykit/slope_set.hpp"
#include "fareykit/transforms.hpp"

namespace fareykit {

/**
 * Max pairwise Farey distance. Without an explicit method the oracle is used
 * whenever the entries fit a BFS grid comfortably, and the exact fast path
 * otherwise (twist orbits grow past any grid quickly). Throws EmptySet.
 */
std::uint64_t diameter(const SlopeSet& set, std::optional<DistanceMethod> method = std::nullopt);

/// Set union. With both bounds present the result carries
/// bound(a) + bound(b) + d(first(a), first(b)); otherwise its measured diameter.
SlopeSet set_union(const SlopeSet& a, const SlopeSet& b);

struct TwistRange {
    long long first = 0;
    long long last = 0;  // inclusive
};

/// { D_alpha^n(beta) : beta in b, n in range }, certified by
/// 2*diameter(b) + 2*min_beta d(alpha, beta) regardless of the range width.
/// Throws EmptySet.
SlopeSet twist_saturate(const SlopeSet& b, const Slope& alpha, TwistRange range);

/// floor(2*log2(max(c, 2))) + 1: the per-leg bound used by delta_neighborhood.
std::uint64_t delta_leg_bound(std::uint64_t c);

/// The unadjusted 4*log2(c) + d. Equal to d when c = 0.
double unadjusted_delta_bound(std::uint64_t diameter, std::uint64_t c);

/**
 * { alpha : exists beta in b with Delta(alpha, beta) <= c }. New slopes are
 * kept only when their canonical entries are <= entry_bound; members of b are
 * always kept. Certified by diameter(b) + 2*delta_leg_bound(c).
 */
SlopeSet delta_neighborhood(const SlopeSet& b, std::uint64_t c, const Integer& entry_bound);

enum class ClosureRule { Subset, Union, TwistOrbit, DeltaNeighborhood };

std::string to_string(ClosureRule rule);
ClosureRule parse_closure_rule(std::string_view text);

struct ClosureStep {
    ClosureRule rule = ClosureRule::Subset;
    /// Subset: the chosen subset. Union: the other operand.
    SlopeSet operand;
    /// TwistOrbit parameters.
    std::optional<Slope> alpha;
    std::optional<TwistRange> range;
    /// DeltaNeighborhood parameters.
    std::optional<std::uint64_t> c;
    std::optional<Integer> entry_bound;
    /// The set after this step.
    SlopeSet result;
};

/// A derivation of a set from a singleton using only the four closure rules.
struct ClosureDerivation {
    Slope seed;
    std::vector<ClosureStep> steps;

    const SlopeSet& final_set() const;
};

/**
 * Derives the truncated ball of radius d about target from {seed}: one
 * DeltaNeighborhood step with c = Delta(seed, target) followed by a Subset
 * down to {target} (just the Subset when seed = target), then d
 * DeltaNeighborhood steps with c = 1.
 */
ClosureDerivation closure_derive(const Slope& seed, const Slope& target, std::uint64_t d, const Integer& entry_bound);

struct ReplayResult {
    bool ok = true;
    /// Index of the first step whose recomputed set differs, when !ok.
    std::optional<std::size_t> failed_step;
    std::string message;
    SlopeSet final_set;
};

/// Recomputes every step from {seed} and compares against the recorded sets.
ReplayResult replay(const ClosureDerivation& derivation);

}  // namespace fareykit
