#include "fareykit/farey_metric.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace fareykit {

namespace detail {

std::int64_t floor_div(std::int64_t a, std::int64_t b) noexcept {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) noexcept { return -floor_div(-a, b); }

std::pair<std::int64_t, std::int64_t> bezout(std::int64_t a, std::int64_t b) noexcept {
    std::int64_t old_r = a, r = b;
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_s, old_t};
}

}  // namespace detail

namespace {

std::int64_t checked_bound(const Integer& bound) {
    auto b = to_int64(bound);
    if (!b || *b > kMaxOracleBound) {
        throw Error(ErrorKind::EntryBoundTooLarge,
                    "oracle entry bound " + bound.str() + " exceeds " + std::to_string(kMaxOracleBound));
    }
    return std::max<std::int64_t>(*b, 1);
}

std::int64_t covering_bound(const Integer& requested, const Slope& a, const Slope& b) {
    Integer m = requested;
    m = std::max(m, a.max_entry());
    m = std::max(m, b.max_entry());
    return checked_bound(m);
}

std::int64_t doubled(std::int64_t bound) {
    if (bound > kMaxOracleBound / 2) {
        throw Error(ErrorKind::EntryBoundTooLarge,
                    "doubling the oracle bound past " + std::to_string(kMaxOracleBound));
    }
    return bound * 2;
}

}  // namespace

TruncatedFareyGraph::TruncatedFareyGraph(std::int64_t bound) : bound_(bound) {
    if (bound < 1 || bound > kMaxOracleBound) {
        throw Error(ErrorKind::EntryBoundTooLarge, "grid bound " + std::to_string(bound) + " out of range");
    }
}

bool TruncatedFareyGraph::contains(std::int64_t x, std::int64_t y) const noexcept {
    return x >= 0 && x <= bound_ && y >= -bound_ && y <= bound_;
}

bool TruncatedFareyGraph::contains(const Slope& s) const { return s.max_entry() <= bound_; }

std::size_t TruncatedFareyGraph::index(std::int64_t x, std::int64_t y) const noexcept {
    return static_cast<std::size_t>(x * (2 * bound_ + 1) + (y + bound_));
}

std::size_t TruncatedFareyGraph::index(const Slope& s) const {
    return index(s.x().convert_to<std::int64_t>(), s.y().convert_to<std::int64_t>());
}

Slope TruncatedFareyGraph::slope_at(std::size_t idx) const {
    const auto width = static_cast<std::size_t>(2 * bound_ + 1);
    auto x = static_cast<std::int64_t>(idx / width);
    auto y = static_cast<std::int64_t>(idx % width) - bound_;
    return Slope::from_vector(x, y);
}

std::vector<std::int32_t> TruncatedFareyGraph::bfs(const Slope& source, std::optional<std::size_t> stop_at,
                                                   std::vector<std::int32_t>* predecessor) const {
    std::vector<std::int32_t> dist(node_count(), -1);
    if (predecessor) {
        predecessor->assign(node_count(), -1);
    }
    const std::size_t start = index(source);
    const auto width = 2 * bound_ + 1;
    std::vector<std::uint32_t> frontier{static_cast<std::uint32_t>(start)};
    std::vector<std::uint32_t> next;
    dist[start] = 0;
    std::int32_t level = 0;
    while (!frontier.empty()) {
        next.clear();
        for (std::uint32_t u : frontier) {
            if (stop_at && u == *stop_at) {
                return dist;
            }
            const std::int64_t x = static_cast<std::int64_t>(u) / width;
            const std::int64_t y = static_cast<std::int64_t>(u) % width - bound_;
            for_each_neighbour(x, y, [&](std::size_t w) {
                if (dist[w] < 0) {
                    dist[w] = level + 1;
                    if (predecessor) {
                        (*predecessor)[w] = static_cast<std::int32_t>(u);
                    }
                    next.push_back(static_cast<std::uint32_t>(w));
                }
            });
        }
        frontier.swap(next);
        ++level;
    }
    return dist;
}

DistanceResult distance_oracle(const Slope& a, const Slope& b, const Integer& entry_bound,
                               const OracleOptions& options) {
    std::int64_t bound = covering_bound(entry_bound, a, b);
    auto run = [&](std::int64_t bnd) {
        TruncatedFareyGraph graph(bnd);
        auto dist = graph.bfs(a, graph.index(b));
        return dist[graph.index(b)];
    };
    std::int32_t previous = run(bound);
    for (int i = 0; i < options.max_doublings; ++i) {
        bound = doubled(bound);
        std::int32_t current = run(bound);
        if (current == previous && current >= 0) {
            return {static_cast<std::uint64_t>(current), DistanceMethod::Oracle, true, bound};
        }
        previous = current;
    }
    throw Error(ErrorKind::Unstable, "distance " + to_string(a) + " -> " + to_string(b) + " did not stabilize after " +
                                         std::to_string(options.max_doublings) + " doublings");
}

DistanceResult distance(const Slope& a, const Slope& b) {
    // Rows (y, -x) and (s, t) with s*x + t*y = 1 send b = (x, y) to (0, 1).
    const Integer& bx = b.x();
    const Integer& by = b.y();
    Bezout bz = extended_gcd(bx, by);
    Integer ix = by * a.x() - bx * a.y();
    Integer iy = bz.s * a.x() + bz.t * a.y();
    Slope image = Slope::from_vector(ix, iy);
    return {cf_min_length(image), DistanceMethod::Fast, true, 0};
}

GeodesicPath geodesic_path(const Slope& a, const Slope& b, const OracleOptions& options) {
    if (a == b) {
        return {{a}};
    }
    DistanceResult confirmed = distance_oracle(a, b, 1, options);
    TruncatedFareyGraph graph(confirmed.entry_bound);
    std::vector<std::int32_t> pred;
    const std::size_t target = graph.index(b);
    graph.bfs(a, target, &pred);
    std::vector<Slope> reversed;
    for (std::int32_t at = static_cast<std::int32_t>(target); at >= 0; at = pred[static_cast<std::size_t>(at)]) {
        reversed.push_back(graph.slope_at(static_cast<std::size_t>(at)));
    }
    std::reverse(reversed.begin(), reversed.end());
    return {std::move(reversed)};
}

OracleField::OracleField(const Slope& source, const Integer& entry_bound, const OracleOptions& options)
    : source_(source), bound_(covering_bound(entry_bound, source, source)), confirming_bound_(bound_) {
    TruncatedFareyGraph base(bound_);
    auto restrict_to_base = [&](const TruncatedFareyGraph& graph, const std::vector<std::int32_t>& dist) {
        std::vector<std::int32_t> out(base.node_count(), -1);
        for (std::int64_t x = 0; x <= bound_; ++x) {
            for (std::int64_t y = -bound_; y <= bound_; ++y) {
                out[base.index(x, y)] = dist[graph.index(x, y)];
            }
        }
        return out;
    };
    std::vector<std::int32_t> previous = base.bfs(source);
    std::int64_t bound = bound_;
    for (int i = 0; i < options.max_doublings; ++i) {
        bound = doubled(bound);
        TruncatedFareyGraph graph(bound);
        std::vector<std::int32_t> current = restrict_to_base(graph, graph.bfs(source));
        if (current == previous) {
            distances_ = std::move(current);
            confirming_bound_ = bound;
            return;
        }
        previous = std::move(current);
    }
    throw Error(ErrorKind::Unstable, "distances from " + to_string(source) + " did not stabilize after " +
                                         std::to_string(options.max_doublings) + " doublings");
}

std::optional<std::uint64_t> OracleField::distance_to(const Slope& target) const {
    if (target.max_entry() > bound_) {
        return std::nullopt;
    }
    TruncatedFareyGraph base(bound_);
    return static_cast<std::uint64_t>(distances_[base.index(target)]);
}

std::vector<Slope> OracleField::within(std::uint64_t radius) const {
    TruncatedFareyGraph base(bound_);
    std::vector<Slope> out;
    for (std::size_t i = 0; i < distances_.size(); ++i) {
        if (distances_[i] >= 0 && static_cast<std::uint64_t>(distances_[i]) <= radius) {
            out.push_back(base.slope_at(i));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SlopeSet enumerate_ball(const Slope& center, std::uint64_t radius, const Integer& entry_bound,
                        const OracleOptions& options) {
    SlopeSet out;
    if (radius == 0) {
        if (center.max_entry() <= entry_bound) {
            out.members.insert(center);
        }
        return out;
    }
    if (entry_bound < 1) {
        return out;
    }
    OracleField field(center, entry_bound, options);
    for (auto& s : field.within(radius)) {
        if (s.max_entry() <= entry_bound) {
            out.members.insert(std::move(s));
        }
    }
    return out;
}

DistanceMethod preferred_method(const Integer& max_entry) {
    return max_entry <= 256 ? DistanceMethod::Oracle : DistanceMethod::Fast;
}

std::vector<std::vector<std::uint64_t>> pairwise_distances(std::span<const Slope> slopes, DistanceMethod method,
                                                           const OracleOptions& options) {
    const std::size_t n = slopes.size();
    std::vector<std::vector<std::uint64_t>> out(n, std::vector<std::uint64_t>(n, 0));
    if (method == DistanceMethod::Fast) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                out[i][j] = out[j][i] = distance(slopes[i], slopes[j]).value;
            }
        }
        return out;
    }
    Integer bound = 1;
    for (const auto& s : slopes) {
        bound = std::max(bound, s.max_entry());
    }
    for (std::size_t i = 0; i < n; ++i) {
        OracleField field(slopes[i], bound, options);
        for (std::size_t j = 0; j < n; ++j) {
            out[i][j] = *field.distance_to(slopes[j]);
        }
    }
    return out;
}

}  // namespace fareykit
