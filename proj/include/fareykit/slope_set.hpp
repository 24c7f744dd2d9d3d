#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "fareykit/slope.hpp"

namespace fareykit {

/// A finite set of slopes, optionally carrying an upper bound on its Farey
/// diameter that was derived (not measured) when the set was built.
struct SlopeSet {
    std::set<Slope> members;
    std::optional<std::uint64_t> certified_bound;

    SlopeSet() = default;
    SlopeSet(std::initializer_list<Slope> init) : members(init) {}
    explicit SlopeSet(std::set<Slope> m, std::optional<std::uint64_t> bound = std::nullopt)
        : members(std::move(m)), certified_bound(bound) {}

    bool empty() const noexcept { return members.empty(); }
    std::size_t size() const noexcept { return members.size(); }
    bool contains(const Slope& s) const { return members.count(s) != 0; }

    /// Largest canonical entry over all members; 0 when empty.
    Integer max_entry() const;

    friend bool operator==(const SlopeSet&, const SlopeSet&) = default;
};

/**
 * Line-oriented slope list:
 *
 *     # comment
 *     certified_bound 4
 *     0/1
 *     -3/5
 *
 * Blank lines and '#' comments are ignored. At most one certified_bound line.
 * Writing emits members in canonical order, one per line.
 */
SlopeSet parse_slope_list(std::string_view text);
std::string format_slope_list(const SlopeSet& set);

}  // namespace fareykit
