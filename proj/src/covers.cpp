#include "fareykit/covers.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace fareykit {

CoverMap::CoverMap(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), degree_(abs(a_ * d_ - b_ * c_)) {
    if (degree_ == 0) {
        throw Error(ErrorKind::BadMatrix, "cover matrix " + to_string(*this) + " is singular");
    }
}

std::string to_string(const CoverMap& c) {
    return "[[" + c.a().str() + "," + c.b().str() + "],[" + c.c().str() + "," + c.d().str() + "]]";
}

CoverMap parse_cover_matrix(std::string_view text) {
    std::vector<Integer> entries;
    std::string field;
    std::istringstream in{std::string(text)};
    while (std::getline(in, field, ',')) {
        entries.push_back(parse_integer(field));
    }
    if (entries.size() != 4) {
        throw Error(ErrorKind::ParseError, "matrix needs exactly four entries a,b,c,d");
    }
    return {entries[0], entries[1], entries[2], entries[3]};
}

Slope pushforward_slope(const CoverMap& c, const Slope& s) {
    return Slope::from_vector(c.a() * s.x() + c.b() * s.y(), c.c() * s.x() + c.d() * s.y());
}

Slope pullback_slope(const CoverMap& c, const Slope& s) {
    return Slope::from_vector(c.d() * s.x() - c.b() * s.y(), -c.c() * s.x() + c.a() * s.y());
}

bool within_lipschitz_bound(const Integer& degree, std::uint64_t d_source, std::uint64_t d_image) {
    if (degree == 1) {
        return d_image <= d_source;
    }
    Integer lhs = Integer(1) << d_image;
    Integer rhs = boost::multiprecision::pow(degree, static_cast<unsigned>(2 * d_source));
    return lhs <= rhs;
}

namespace {

// Distances for every pair, one stabilized BFS per distinct first slope.
std::vector<std::uint64_t> grouped_distances(const std::vector<std::pair<Slope, Slope>>& pairs,
                                             const OracleOptions& options) {
    Integer bound = 1;
    std::map<Slope, std::vector<std::size_t>> by_source;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        bound = std::max(bound, pairs[i].first.max_entry());
        bound = std::max(bound, pairs[i].second.max_entry());
        by_source[pairs[i].first].push_back(i);
    }
    std::vector<std::uint64_t> out(pairs.size(), 0);
    for (const auto& [source, indices] : by_source) {
        OracleField field(source, bound, options);
        for (std::size_t i : indices) {
            out[i] = *field.distance_to(pairs[i].second);
        }
    }
    return out;
}

}  // namespace

LipschitzAudit lipschitz_audit(const CoverMap& c, const std::vector<std::pair<Slope, Slope>>& pairs,
                               const OracleOptions& options) {
    LipschitzAudit report;
    report.degree = c.degree();
    report.constant = c.degree() == 1 ? 1.0 : 2.0 * std::log2(c.degree().convert_to<double>());

    std::vector<std::pair<Slope, Slope>> images;
    images.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        images.emplace_back(pushforward_slope(c, a), pushforward_slope(c, b));
    }
    std::vector<std::uint64_t> up = grouped_distances(pairs, options);
    std::vector<std::uint64_t> down = grouped_distances(images, options);

    std::optional<PairAudit> worst_forward, worst_backward;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        PairAudit entry{pairs[i].first, pairs[i].second, images[i].first, images[i].second, up[i], down[i], true};
        ++report.pairs_checked;
        if (up[i] == 0 || down[i] == 0) {
            continue;  // equal slopes, and the correspondence is a bijection
        }
        double forward = static_cast<double>(down[i]) / static_cast<double>(up[i]);
        double backward = static_cast<double>(up[i]) / static_cast<double>(down[i]);
        if (!worst_forward || forward > report.max_forward_ratio) {
            report.max_forward_ratio = forward;
            worst_forward = entry;
        }
        if (!worst_backward || backward > report.max_backward_ratio) {
            report.max_backward_ratio = backward;
            worst_backward = entry;
        }
        bool fwd_ok = within_lipschitz_bound(c.degree(), up[i], down[i]);
        bool bwd_ok = within_lipschitz_bound(c.degree(), down[i], up[i]);
        report.forward_within_bound = report.forward_within_bound && fwd_ok;
        report.backward_within_bound = report.backward_within_bound && bwd_ok;
        if (!fwd_ok || !bwd_ok) {
            report.violations.push_back(entry);
        }
    }
    if (worst_forward) {
        report.extremal.push_back(*worst_forward);
        report.extremal.push_back(*worst_backward);
    }
    return report;
}

std::vector<Slope> slopes_within(std::int64_t entry_bound) {
    std::vector<Slope> out;
    for (std::int64_t x = 0; x <= entry_bound; ++x) {
        for (std::int64_t y = -entry_bound; y <= entry_bound; ++y) {
            if (std::gcd(x, y) == 1 && (x > 0 || y == 1)) {
                out.push_back(Slope::from_vector(x, y));
            }
        }
    }
    return out;
}

std::vector<std::pair<Slope, Slope>> all_pairs_within(std::int64_t entry_bound) {
    auto slopes = slopes_within(entry_bound);
    std::vector<std::pair<Slope, Slope>> out;
    for (std::size_t i = 0; i < slopes.size(); ++i) {
        for (std::size_t j = i + 1; j < slopes.size(); ++j) {
            out.emplace_back(slopes[i], slopes[j]);
        }
    }
    return out;
}

}  // namespace fareykit
