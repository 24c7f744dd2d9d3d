#include "fareykit/bounded_sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fareykit {

std::uint64_t diameter(const SlopeSet& set, std::optional<DistanceMethod> method) {
    if (set.empty()) {
        throw Error(ErrorKind::EmptySet, "diameter of the empty set");
    }
    std::vector<Slope> members(set.members.begin(), set.members.end());
    DistanceMethod how = method.value_or(preferred_method(set.max_entry()));
    auto table = pairwise_distances(members, how);
    std::uint64_t best = 0;
    for (const auto& row : table) {
        for (std::uint64_t d : row) {
            best = std::max(best, d);
        }
    }
    return best;
}

SlopeSet set_union(const SlopeSet& a, const SlopeSet& b) {
    if (a.empty()) {
        return b;
    }
    if (b.empty()) {
        return a;
    }
    SlopeSet out(a.members);
    out.members.insert(b.members.begin(), b.members.end());
    if (a.certified_bound && b.certified_bound) {
        std::uint64_t bridge = distance(*a.members.begin(), *b.members.begin()).value;
        out.certified_bound = *a.certified_bound + *b.certified_bound + bridge;
    } else {
        out.certified_bound = diameter(out);
    }
    return out;
}

SlopeSet twist_saturate(const SlopeSet& b, const Slope& alpha, TwistRange range) {
    if (b.empty()) {
        throw Error(ErrorKind::EmptySet, "twist_saturate needs a non-empty set");
    }
    SlopeSet out;
    const UnimodularMap twist = twist_map(alpha);
    for (const auto& beta : b.members) {
        if (range.first > range.last) {
            break;
        }
        UnimodularMap current = twist.power(range.first);
        for (long long n = range.first;; ++n) {
            out.members.insert(apply_map(current, beta));
            if (n == range.last) {
                break;
            }
            current = twist * current;
        }
    }
    std::uint64_t nearest = std::numeric_limits<std::uint64_t>::max();
    for (const auto& beta : b.members) {
        nearest = std::min(nearest, distance(alpha, beta).value);
    }
    out.certified_bound = 2 * diameter(b) + 2 * nearest;
    return out;
}

std::uint64_t delta_leg_bound(std::uint64_t c) {
    Integer m = std::max<std::uint64_t>(c, 2);
    return floor_log2(m * m) + 1;
}

double unadjusted_delta_bound(std::uint64_t diameter, std::uint64_t c) {
    if (c == 0) {
        return static_cast<double>(diameter);
    }
    return 4.0 * std::log2(static_cast<double>(c)) + static_cast<double>(diameter);
}

namespace {

// Range of t with |base + t*step| <= bound, intersected into [lo, hi].
void clip(const Integer& base, const Integer& step, const Integer& bound, Integer& lo, Integer& hi) {
    if (step == 0) {
        if (abs(base) > bound) {
            lo = 1;
            hi = 0;
        }
        return;
    }
    if (step < 0) {
        clip(-base, -step, bound, lo, hi);
        return;
    }
    Integer a = -floor_div(bound + base, step);  // ceil((-bound - base) / step)
    Integer b = floor_div(bound - base, step);
    if (a > lo) {
        lo = a;
    }
    if (b < hi) {
        hi = b;
    }
}

// Slopes alpha with det(beta, alpha) = k and entries <= bound: k*w0 + t*beta.
void add_at_intersection(const Slope& beta, const Integer& k, const Integer& bound, std::set<Slope>& out) {
    Bezout bz = extended_gcd(beta.x(), -beta.y());
    const Integer w0x = k * bz.t;
    const Integer w0y = k * bz.s;
    Integer lo = -(bound + abs(w0x) + abs(w0y) + 1);
    Integer hi = -lo;
    clip(w0x, beta.x(), bound, lo, hi);
    clip(w0y, beta.y(), bound, lo, hi);
    for (Integer t = lo; t <= hi; ++t) {
        Integer ax = w0x + t * beta.x();
        Integer ay = w0y + t * beta.y();
        if (gcd(ax, ay) == 1) {
            out.insert(Slope::from_vector(ax, ay));
        }
    }
}

}  // namespace

SlopeSet delta_neighborhood(const SlopeSet& b, std::uint64_t c, const Integer& entry_bound) {
    SlopeSet out(b.members);
    if (b.empty()) {
        return out;
    }
    for (const auto& beta : b.members) {
        // |det(beta, alpha)| <= 2 * bound * max_entry(beta) inside the box.
        Integer reach = 2 * entry_bound * beta.max_entry();
        Integer top = Integer(c) < reach ? Integer(c) : reach;
        for (Integer k = 1; k <= top; ++k) {
            add_at_intersection(beta, k, entry_bound, out.members);
        }
    }
    out.certified_bound = diameter(b) + 2 * delta_leg_bound(c);
    return out;
}

std::string to_string(ClosureRule rule) {
    switch (rule) {
    case ClosureRule::Subset: return "Subset";
    case ClosureRule::Union: return "Union";
    case ClosureRule::TwistOrbit: return "TwistOrbit";
    case ClosureRule::DeltaNeighborhood: return "DeltaNeighborhood";
    }
    return "?";
}

ClosureRule parse_closure_rule(std::string_view text) {
    for (ClosureRule r : {ClosureRule::Subset, ClosureRule::Union, ClosureRule::TwistOrbit,
                          ClosureRule::DeltaNeighborhood}) {
        if (to_string(r) == text) {
            return r;
        }
    }
    throw Error(ErrorKind::ParseError, "unknown closure rule '" + std::string(text) + "'");
}

const SlopeSet& ClosureDerivation::final_set() const {
    if (steps.empty()) {
        throw Error(ErrorKind::EmptySet, "derivation has no steps");
    }
    return steps.back().result;
}

namespace {

ClosureStep delta_step(const SlopeSet& from, std::uint64_t c, const Integer& entry_bound) {
    ClosureStep step;
    step.rule = ClosureRule::DeltaNeighborhood;
    step.c = c;
    step.entry_bound = entry_bound;
    step.result = delta_neighborhood(from, c, entry_bound);
    return step;
}

ClosureStep subset_step(const SlopeSet& chosen) {
    ClosureStep step;
    step.rule = ClosureRule::Subset;
    step.operand = chosen;
    step.result = chosen;
    return step;
}

}  // namespace

ClosureDerivation closure_derive(const Slope& seed, const Slope& target, std::uint64_t d, const Integer& entry_bound) {
    ClosureDerivation out{seed, {}};
    SlopeSet singleton{target};
    singleton.certified_bound = 0;
    if (seed != target) {
        Integer reach = std::max(entry_bound, target.max_entry());
        std::uint64_t c = intersection_number(seed, target).convert_to<std::uint64_t>();
        out.steps.push_back(delta_step(SlopeSet{seed}, c, reach));
    }
    out.steps.push_back(subset_step(singleton));
    for (std::uint64_t i = 0; i < d; ++i) {
        out.steps.push_back(delta_step(out.steps.back().result, 1, entry_bound));
    }
    return out;
}

ReplayResult replay(const ClosureDerivation& derivation) {
    ReplayResult out;
    SlopeSet current{derivation.seed};
    for (std::size_t i = 0; i < derivation.steps.size(); ++i) {
        const ClosureStep& step = derivation.steps[i];
        SlopeSet next;
        switch (step.rule) {
        case ClosureRule::Subset:
            if (!std::includes(current.members.begin(), current.members.end(), step.operand.members.begin(),
                               step.operand.members.end())) {
                out.ok = false;
                out.failed_step = i;
                out.message = "subset step is not contained in the previous set";
                out.final_set = current;
                return out;
            }
            next = step.operand;
            break;
        case ClosureRule::Union:
            next = set_union(current, step.operand);
            break;
        case ClosureRule::TwistOrbit:
            if (!step.alpha || !step.range) {
                out = {false, i, "twist step is missing its parameters", current};
                return out;
            }
            next = twist_saturate(current, *step.alpha, *step.range);
            break;
        case ClosureRule::DeltaNeighborhood:
            if (!step.c || !step.entry_bound) {
                out = {false, i, "delta step is missing its parameters", current};
                return out;
            }
            next = delta_neighborhood(current, *step.c, *step.entry_bound);
            break;
        }
        if (next.members != step.result.members) {
            out = {false, i, "step " + std::to_string(i) + " (" + to_string(step.rule) + ") does not reproduce", next};
            return out;
        }
        current = std::move(next);
    }
    out.final_set = std::move(current);
    return out;
}

}  // namespace fareykit
