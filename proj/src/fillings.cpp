#include "fareykit/fillings.hpp"

#include <algorithm>
#include <set>

#include <boost/algorithm/string.hpp>

namespace fareykit {

namespace {

std::string trimmed(std::string_view s) { return boost::algorithm::trim_copy(std::string(s)); }

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    boost::algorithm::split(parts, s, [sep](char c) { return c == sep; });
    for (auto& p : parts) {
        boost::algorithm::trim(p);
    }
    return parts;
}

void check_index(const Multislope& a, std::size_t i) {
    if (i < 1 || i > a.size()) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "index " + std::to_string(i) + " outside 1.." + std::to_string(a.size()));
    }
}

}  // namespace

std::size_t Multislope::filled_count() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const FillingEntry& e) { return e.is_filled(); }));
}

const FillingEntry& Multislope::at(std::size_t index) const {
    check_index(*this, index);
    return entries[index - 1];
}

std::strong_ordering operator<=>(const Multislope& a, const Multislope& b) {
    return std::lexicographical_compare_three_way(a.entries.begin(), a.entries.end(), b.entries.begin(),
                                                  b.entries.end());
}

std::string to_string(const Multislope& m) {
    std::string out = "(";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) {
            out += ", ";
        }
        out += to_string(m.entries[i]);
    }
    return out + ")";
}

Multislope parse_multislope(std::string_view text) {
    std::string t = trimmed(text);
    if (!t.empty() && t.front() == '(') {
        if (t.back() != ')') {
            throw Error(ErrorKind::ParseError, "unbalanced parentheses in '" + std::string(text) + "'");
        }
        t = t.substr(1, t.size() - 2);
    }
    if (trimmed(t).empty()) {
        throw Error(ErrorKind::ParseError, "empty multislope");
    }
    Multislope out;
    for (const auto& part : split(t, ',')) {
        out.entries.push_back(parse_filling_entry(part));
    }
    return out;
}

bool pf_leq(const Multislope& a, const Multislope& b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::LengthMismatch,
                    "multislopes of length " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.entries[i].is_filled() && a.entries[i] != b.entries[i]) {
            return false;
        }
    }
    return true;
}

Multislope hat(const Multislope& a, std::size_t i) {
    check_index(a, i);
    Multislope out = a;
    out.entries[i - 1] = FillingEntry::unfilled();
    return out;
}

Multislope restriction(const Multislope& a, const std::vector<std::size_t>& keep) {
    Multislope out;
    for (std::size_t i : keep) {
        out.entries.push_back(a.at(i));
    }
    return out;
}

Multislope restriction(const Multislope& a, const std::vector<std::string>& source_labels,
                       const std::vector<std::string>& target_labels) {
    if (source_labels.size() != a.size()) {
        throw Error(ErrorKind::LengthMismatch, std::to_string(source_labels.size()) + " labels for a multislope of length " +
                                                   std::to_string(a.size()));
    }
    Multislope out;
    for (const auto& label : target_labels) {
        auto it = std::find(source_labels.begin(), source_labels.end(), label);
        out.entries.push_back(it == source_labels.end()
                                  ? FillingEntry::unfilled()
                                  : a.entries[static_cast<std::size_t>(it - source_labels.begin())]);
    }
    return out;
}

std::vector<Multislope> strict_partial_fillings(const Multislope& a) {
    std::vector<std::size_t> filled;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.entries[i].is_filled()) {
            filled.push_back(i);
        }
    }
    if (filled.size() >= 63) {
        throw Error(ErrorKind::IndexOutOfRange, "too many filled entries to enumerate partial fillings");
    }
    const std::uint64_t count = std::uint64_t{1} << filled.size();
    std::vector<Multislope> out;
    out.reserve(count - 1);
    for (std::uint64_t mask = 1; mask < count; ++mask) {
        Multislope b = a;
        for (std::size_t j = 0; j < filled.size(); ++j) {
            if (mask >> j & 1) {
                b.entries[filled[j]] = FillingEntry::unfilled();
            }
        }
        out.push_back(std::move(b));
    }
    return out;
}

std::string to_string(Hyperbolicity h) { return h == Hyperbolicity::Hyperbolic ? "H" : "N"; }

SlopeGrid parse_grid_spec(std::string_view text) {
    if (trimmed(text).empty()) {
        throw Error(ErrorKind::ParseError, "empty grid spec");
    }
    SlopeGrid grid;
    for (const auto& index : split(text, ';')) {
        std::vector<Slope> slopes;
        if (!index.empty()) {
            for (const auto& field : split(index, ',')) {
                if (field == "inf") {
                    continue;
                }
                Slope s = parse_slope(field);
                if (std::find(slopes.begin(), slopes.end(), s) == slopes.end()) {
                    slopes.push_back(std::move(s));
                }
            }
        }
        grid.push_back(std::move(slopes));
    }
    return grid;
}

std::string format_grid_spec(const SlopeGrid& grid) {
    std::string out;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (i) {
            out += ';';
        }
        for (std::size_t j = 0; j < grid[i].size(); ++j) {
            if (j) {
                out += ',';
            }
            out += to_string(grid[i][j]);
        }
    }
    return out;
}

std::vector<Multislope> grid_closure(const SlopeGrid& grid) {
    std::vector<Multislope> out;
    if (grid.empty()) {
        return out;
    }
    std::vector<std::vector<FillingEntry>> choices;
    for (const auto& slopes : grid) {
        std::vector<FillingEntry> c{FillingEntry::unfilled()};
        for (const auto& s : slopes) {
            c.push_back(FillingEntry::filled(s));
        }
        choices.push_back(std::move(c));
    }
    std::vector<std::size_t> odometer(grid.size(), 0);
    while (true) {
        Multislope m;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            m.entries.push_back(choices[i][odometer[i]]);
        }
        out.push_back(std::move(m));
        std::size_t i = grid.size();
        while (i > 0) {
            --i;
            if (++odometer[i] < choices[i].size()) {
                break;
            }
            odometer[i] = 0;
            if (i == 0) {
                return out;
            }
        }
    }
}

HyperbolicityOracle::HyperbolicityOracle(SlopeGrid grid, Predicate predicate)
    : grid_(std::move(grid)), predicate_(std::move(predicate)) {}

HyperbolicityOracle HyperbolicityOracle::from_predicate(SlopeGrid grid, Predicate predicate) {
    return HyperbolicityOracle(std::move(grid), std::move(predicate));
}

HyperbolicityOracle HyperbolicityOracle::from_table(SlopeGrid grid, Table table, std::optional<Hyperbolicity> fallback) {
    return HyperbolicityOracle(std::move(grid), [table = std::move(table), fallback](const Multislope& m) {
        auto it = table.find(m);
        if (it != table.end()) {
            return it->second;
        }
        if (fallback) {
            return *fallback;
        }
        throw Error(ErrorKind::OracleDomain, "oracle table has no entry for " + to_string(m));
    });
}

bool HyperbolicityOracle::in_domain(const Multislope& m) const {
    if (m.size() != grid_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        const FillingEntry& e = m.entries[i];
        if (e.is_filled() && std::find(grid_[i].begin(), grid_[i].end(), e.slope()) == grid_[i].end()) {
            return false;
        }
    }
    return true;
}

Hyperbolicity HyperbolicityOracle::query(const Multislope& m) const {
    if (!in_domain(m)) {
        throw Error(ErrorKind::OracleDomain, to_string(m) + " is outside the oracle grid");
    }
    return predicate_(m);
}

void HyperbolicityOracle::validate_total() const {
    for (const auto& m : grid_closure(grid_)) {
        query(m);
    }
}

HyperbolicityOracle parse_oracle_file(std::string_view text, std::optional<SlopeGrid> grid) {
    HyperbolicityOracle::Table table;
    std::optional<Hyperbolicity> fallback;
    std::optional<SlopeGrid> declared;
    auto verdict = [](const std::string& word, std::size_t line_no) {
        if (word == "H") {
            return Hyperbolicity::Hyperbolic;
        }
        if (word == "N") {
            return Hyperbolicity::NonHyperbolic;
        }
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected H or N, got '" + word + "'");
    };
    std::size_t line_no = 0;
    for (const auto& raw : split(text, '\n')) {
        ++line_no;
        std::string line = raw.substr(0, raw.find('#'));
        boost::algorithm::trim(line);
        if (line.empty()) {
            continue;
        }
        if (boost::algorithm::starts_with(line, "grid ")) {
            declared = parse_grid_spec(line.substr(5));
            continue;
        }
        if (boost::algorithm::starts_with(line, "default ")) {
            fallback = verdict(trimmed(line.substr(8)), line_no);
            continue;
        }
        std::size_t close = line.rfind(')');
        if (line.front() != '(' || close == std::string::npos) {
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected '(entries) H|N'");
        }
        Multislope m = parse_multislope(line.substr(0, close + 1));
        Hyperbolicity h = verdict(trimmed(line.substr(close + 1)), line_no);
        if (!table.emplace(m, h).second && table[m] != h) {
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": conflicting entry for " + to_string(m));
        }
    }
    SlopeGrid g;
    if (grid) {
        g = std::move(*grid);
    } else if (declared) {
        g = std::move(*declared);
    } else {
        throw Error(ErrorKind::ParseError, "oracle file has no grid line and no grid was given");
    }
    for (const auto& [m, h] : table) {
        if (m.size() != g.size()) {
            throw Error(ErrorKind::ParseError, "entry " + to_string(m) + " has the wrong arity for the grid");
        }
    }
    return HyperbolicityOracle::from_table(std::move(g), std::move(table), fallback);
}

MnhCheck is_mnh(const Multislope& a, const HyperbolicityOracle& oracle) {
    if (oracle.hyperbolic(a)) {
        return {false, a};
    }
    for (const auto& b : strict_partial_fillings(a)) {
        if (!oracle.hyperbolic(b)) {
            return {false, b};
        }
    }
    return {true, std::nullopt};
}

bool totally_hyperbolic(const Multislope& a, const HyperbolicityOracle& oracle) {
    if (!oracle.hyperbolic(a)) {
        return false;
    }
    for (const auto& b : strict_partial_fillings(a)) {
        if (!oracle.hyperbolic(b)) {
            return false;
        }
    }
    return true;
}

std::optional<Multislope> mnh_partial_filling(const Multislope& a, const HyperbolicityOracle& oracle) {
    if (oracle.hyperbolic(a)) {
        return std::nullopt;
    }
    Multislope current = a;
    while (true) {
        MnhCheck check = is_mnh(current, oracle);
        if (check.mnh) {
            return current;
        }
        current = *check.witness;
    }
}

MnhReport find_all_mnh(const SlopeGrid& grid, const HyperbolicityOracle& oracle) {
    auto candidates = grid_closure(grid);
    for (const auto& m : candidates) {
        oracle.query(m);
    }
    MnhReport report;
    for (const auto& m : candidates) {
        MnhCheck check = is_mnh(m, oracle);
        if (check.mnh) {
            report.mnh.push_back(m);
        } else {
            report.rejected.push_back({m, *check.witness});
        }
    }
    return report;
}

}  // namespace fareykit
