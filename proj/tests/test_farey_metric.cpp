#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "fareykit/farey_metric.hpp"

using namespace fareykit;

namespace {

Slope S(const char* text) { return parse_slope(text); }

std::vector<Slope> box(int bound) {
    std::vector<Slope> out;
    for (int x = 0; x <= bound; ++x) {
        for (int y = -bound; y <= bound; ++y) {
            if (std::gcd(x, y) == 1 && (x > 0 || y == 1)) {
                out.push_back(Slope::from_vector(x, y));
            }
        }
    }
    return out;
}

}  // namespace

TEST(DistanceOracle, Examples) {
    EXPECT_EQ(distance_oracle(S("5/7"), S("5/7"), 7).value, 0u);
    auto adjacent = distance_oracle(S("0/1"), S("1/0"), 1);
    EXPECT_EQ(adjacent.value, 1u);
    EXPECT_TRUE(adjacent.stable);
    EXPECT_EQ(adjacent.method, DistanceMethod::Oracle);
    // Regression fixture; also reproduced by a separate Python grid BFS.
    EXPECT_EQ(distance_oracle(S("0/1"), S("5/7"), 7).value, 3u);
}

TEST(DistanceOracle, RaisesBoundToCoverEndpoints) {
    auto r = distance_oracle(S("0/1"), S("5/7"), 1);
    EXPECT_EQ(r.value, 3u);
    EXPECT_GE(r.entry_bound, 14);
}

TEST(DistanceOracle, NoDoublingsMeansUnstable) {
    try {
        distance_oracle(S("0/1"), S("1/0"), 1, OracleOptions{0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Unstable);
    }
}

TEST(DistanceOracle, RefusesHugeGrids) {
    try {
        distance_oracle(S("0/1"), make_slope(1, 100000), 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::EntryBoundTooLarge);
    }
}

TEST(Distance, Examples) {
    for (int n : {-3, 0, 7}) {
        EXPECT_EQ(distance(S("1/0"), make_slope(n, 1)).value, 1u);
    }
    EXPECT_EQ(distance(S("1/0"), S("1/0")).value, 0u);
    EXPECT_EQ(distance(S("1/0"), S("5/7")).value, distance_oracle(S("1/0"), S("5/7"), 7).value);
    EXPECT_EQ(distance(S("1/0"), S("5/7")).method, DistanceMethod::Fast);
}

TEST(Distance, MatchesOracleOnSmallBox) {
    auto slopes = box(10);
    for (const auto& a : slopes) {
        OracleField field(a, 10);
        for (const auto& b : slopes) {
            ASSERT_EQ(distance(a, b).value, *field.distance_to(b)) << to_string(a) << " " << to_string(b);
        }
    }
}

TEST(Distance, EdgeIffUnitIntersection) {
    auto slopes = box(7);
    for (const auto& a : slopes) {
        for (const auto& b : slopes) {
            EXPECT_EQ(distance(a, b).value == 1, intersection_number(a, b) == 1);
        }
    }
}

TEST(Distance, MetricAxiomsOnSampledTriples) {
    auto slopes = box(12);
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<std::size_t> pick(0, slopes.size() - 1);
    for (int i = 0; i < 2000; ++i) {
        const Slope& a = slopes[pick(rng)];
        const Slope& b = slopes[pick(rng)];
        const Slope& c = slopes[pick(rng)];
        auto ab = distance(a, b).value;
        EXPECT_EQ(ab, distance(b, a).value);
        EXPECT_EQ(ab == 0, a == b);
        EXPECT_LE(ab, distance(a, c).value + distance(c, b).value);
    }
}

TEST(Distance, HandlesBigIntegers) {
    Integer big = Integer(1) << 200;
    Slope a = make_slope(big + 1, big);
    Slope b = make_slope(3, 1);
    auto d = distance(a, b).value;
    EXPECT_EQ(d, distance(b, a).value);
    // (2^200+1)/2^200 = 1 + 1/2^200 is two steps from 1/0, and 3/1 is adjacent
    // to 1/0, so the distance is at most 3.
    EXPECT_EQ(distance(S("1/0"), a).value, 2u);
    EXPECT_LE(d, 3u);
}

TEST(GeodesicPath, Examples) {
    EXPECT_EQ(geodesic_path(S("5/7"), S("5/7")).vertices, std::vector<Slope>{S("5/7")});
    EXPECT_EQ(geodesic_path(S("0/1"), S("1/0")).vertices, (std::vector<Slope>{S("0/1"), S("1/0")}));
    auto path = geodesic_path(S("0/1"), S("5/7"));
    ASSERT_EQ(path.length(), distance(S("0/1"), S("5/7")).value);
    EXPECT_EQ(path.vertices.front(), S("0/1"));
    EXPECT_EQ(path.vertices.back(), S("5/7"));
    for (std::size_t i = 1; i < path.vertices.size(); ++i) {
        EXPECT_TRUE(is_farey_edge(path.vertices[i - 1], path.vertices[i]));
    }
}

TEST(GeodesicPath, EdgesAndLengthsOnSamples) {
    auto slopes = box(9);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, slopes.size() - 1);
    for (int i = 0; i < 200; ++i) {
        const Slope& a = slopes[pick(rng)];
        const Slope& b = slopes[pick(rng)];
        auto path = geodesic_path(a, b);
        ASSERT_EQ(path.length(), distance(a, b).value);
        EXPECT_EQ(path.vertices.front(), a);
        EXPECT_EQ(path.vertices.back(), b);
        for (std::size_t k = 1; k < path.vertices.size(); ++k) {
            EXPECT_TRUE(is_farey_edge(path.vertices[k - 1], path.vertices[k]));
        }
        EXPECT_EQ(path, geodesic_path(a, b));
    }
}

TEST(EnumerateBall, RadiusZeroIsCenter) {
    EXPECT_EQ(enumerate_ball(S("2/3"), 0, 5), (SlopeSet{S("2/3")}));
}

TEST(EnumerateBall, NeighboursOfInfinity) {
    SlopeSet expected{S("1/0")};
    for (int n = -3; n <= 3; ++n) {
        expected.members.insert(make_slope(n, 1));
    }
    EXPECT_EQ(enumerate_ball(S("1/0"), 1, 3), expected);
}

TEST(EnumerateBall, NeighboursOfZero) {
    SlopeSet expected{S("0/1"), S("1/1"), S("-1/1"), S("1/2"), S("-1/2"), S("1/0")};
    EXPECT_EQ(enumerate_ball(S("0/1"), 1, 2), expected);
}

TEST(EnumerateBall, AgreesWithGridScan) {
    for (const char* c : {"0/1", "2/5", "-3/4"}) {
        Slope center = S(c);
        for (std::uint64_t r = 0; r <= 3; ++r) {
            SlopeSet scan;
            for (const auto& s : box(8)) {
                if (distance(center, s).value <= r) {
                    scan.members.insert(s);
                }
            }
            EXPECT_EQ(enumerate_ball(center, r, 8), scan) << c << " r=" << r;
        }
    }
}

TEST(PairwiseDistances, MethodsAgree) {
    auto slopes = box(6);
    auto oracle = pairwise_distances(slopes, DistanceMethod::Oracle);
    auto fast = pairwise_distances(slopes, DistanceMethod::Fast);
    EXPECT_EQ(oracle, fast);
}
