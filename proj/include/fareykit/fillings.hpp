#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fareykit/slope.hpp"

namespace fareykit {

/// One FillingEntry per boundary torus. Operations take 1-based indices.
struct Multislope {
    std::vector<FillingEntry> entries;

    Multislope() = default;
    Multislope(std::initializer_list<FillingEntry> init) : entries(init) {}
    explicit Multislope(std::vector<FillingEntry> e) : entries(std::move(e)) {}

    std::size_t size() const noexcept { return entries.size(); }
    std::size_t filled_count() const;
    /// 1-based. Throws IndexOutOfRange.
    const FillingEntry& at(std::size_t index) const;

    friend bool operator==(const Multislope&, const Multislope&) = default;
    friend std::strong_ordering operator<=>(const Multislope& a, const Multislope& b);
};

/// "(1/0, inf, 3/5)"
std::string to_string(const Multislope& m);
/// Parentheses optional; entries separated by commas. Throws ParseError.
Multislope parse_multislope(std::string_view text);

/// a is a partial filling of b. Throws LengthMismatch.
bool pf_leq(const Multislope& a, const Multislope& b);

/// Entry i replaced by inf. Throws IndexOutOfRange.
Multislope hat(const Multislope& a, std::size_t i);

/// Keeps the listed entries in the listed order. Throws IndexOutOfRange.
Multislope restriction(const Multislope& a, const std::vector<std::size_t>& keep);

/**
 * Restriction between labelled torus families: entry j of the result is the
 * entry of a on target_labels[j] when that torus is among source_labels, and
 * inf otherwise. Throws LengthMismatch when source_labels and a differ in size.
 */
Multislope restriction(const Multislope& a, const std::vector<std::string>& source_labels,
                       const std::vector<std::string>& target_labels);

/// All strict partial fillings; 2^k - 1 of them for k filled entries. The
/// j-th bit of a mask unfills the j-th filled entry, masks in increasing order.
std::vector<Multislope> strict_partial_fillings(const Multislope& a);

enum class Hyperbolicity { Hyperbolic, NonHyperbolic };

std::string to_string(Hyperbolicity h);

/// Slopes allowed per index. inf is always allowed in addition.
using SlopeGrid = std::vector<std::vector<Slope>>;

/// "1/0,0/1;1/0,2/3" - indices separated by ';', slopes by ','.
SlopeGrid parse_grid_spec(std::string_view text);
std::string format_grid_spec(const SlopeGrid& grid);

/// Every multislope over the grid, inf first per index, last index fastest.
std::vector<Multislope> grid_closure(const SlopeGrid& grid);

class HyperbolicityOracle {
public:
    using Predicate = std::function<Hyperbolicity(const Multislope&)>;
    using Table = std::map<Multislope, Hyperbolicity>;

    static HyperbolicityOracle from_predicate(SlopeGrid grid, Predicate predicate);
    /// Queries missing from the table fall back to fallback, or throw
    /// OracleDomain without one.
    static HyperbolicityOracle from_table(SlopeGrid grid, Table table,
                                          std::optional<Hyperbolicity> fallback = std::nullopt);

    const SlopeGrid& grid() const noexcept { return grid_; }
    std::size_t arity() const noexcept { return grid_.size(); }
    bool in_domain(const Multislope& m) const;

    /// Throws OracleDomain outside the grid or on a table gap.
    Hyperbolicity query(const Multislope& m) const;
    bool hyperbolic(const Multislope& m) const { return query(m) == Hyperbolicity::Hyperbolic; }

    /// Queries the whole grid closure once; throws OracleDomain on the first gap.
    void validate_total() const;

private:
    HyperbolicityOracle(SlopeGrid grid, Predicate predicate);

    SlopeGrid grid_;
    Predicate predicate_;
};

/**
 * Oracle file:
 *
 *     # comment
 *     grid 1/0,0/1,1/1;1/0,0/1,1/1
 *     default H
 *     (1/0, inf) N
 *
 * The grid line is optional when a grid is supplied by the caller; a supplied
 * grid wins. Throws ParseError.
 */
HyperbolicityOracle parse_oracle_file(std::string_view text, std::optional<SlopeGrid> grid = std::nullopt);

struct MnhCheck {
    bool mnh = false;
    /// When !mnh: a itself if hyperbolic, else a non-hyperbolic strict partial filling.
    std::optional<Multislope> witness;
};

/// Throws OracleDomain when a or one of its partial fillings is off-grid.
MnhCheck is_mnh(const Multislope& a, const HyperbolicityOracle& oracle);

/// Every partial filling of a, a included, is hyperbolic.
bool totally_hyperbolic(const Multislope& a, const HyperbolicityOracle& oracle);

/// An mnh partial filling of a non-hyperbolic a, found by descending through
/// non-hyperbolic strict partial fillings. nullopt when a is hyperbolic.
std::optional<Multislope> mnh_partial_filling(const Multislope& a, const HyperbolicityOracle& oracle);

struct MnhRejection {
    Multislope candidate;
    Multislope witness;
};

struct MnhReport {
    std::vector<Multislope> mnh;
    std::vector<MnhRejection> rejected;
};

/// Exhaustive scan of grid_closure(grid) in its order. The oracle is checked
/// on the whole closure before the scan. Throws OracleDomain.
MnhReport find_all_mnh(const SlopeGrid& grid, const HyperbolicityOracle& oracle);

}  // namespace fareykit
