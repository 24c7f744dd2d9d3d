#include <gtest/gtest.h>

#include <random>

#include "fareykit/fillings.hpp"
#include "printers.hpp"

using namespace fareykit;

namespace {

Multislope M(const char* text) { return parse_multislope(text); }

Slope S(const char* text) { return parse_slope(text); }

const FillingEntry inf = FillingEntry::unfilled();

SlopeGrid whitehead_grid() { return parse_grid_spec("1/0,0/1,1/1;1/0,0/1,1/1"); }

// Non-hyperbolic exactly when the first torus is filled along 1/0.
HyperbolicityOracle whitehead(SlopeGrid grid) {
    return HyperbolicityOracle::from_predicate(std::move(grid), [](const Multislope& m) {
        const FillingEntry& first = m.entries[0];
        return first.is_filled() && first.slope() == parse_slope("1/0") ? Hyperbolicity::NonHyperbolic
                                                                        : Hyperbolicity::Hyperbolic;
    });
}

// mnh straight from the poset: non-hyperbolic with nothing non-hyperbolic
// strictly below it, found by pairwise pf_leq over the closure.
std::vector<Multislope> mnh_by_poset(const std::vector<Multislope>& all, const HyperbolicityOracle& o) {
    std::vector<Multislope> out;
    for (const auto& a : all) {
        if (o.hyperbolic(a)) {
            continue;
        }
        bool minimal = true;
        for (const auto& b : all) {
            if (b != a && pf_leq(b, a) && !o.hyperbolic(b)) {
                minimal = false;
                break;
            }
        }
        if (minimal) {
            out.push_back(a);
        }
    }
    return out;
}

HyperbolicityOracle random_oracle(std::mt19937_64& rng, std::size_t arity, std::size_t per_index) {
    const std::vector<Slope> pool{S("1/0"), S("0/1"), S("1/1"), S("-1/1"), S("1/2"), S("2/3")};
    SlopeGrid grid(arity);
    for (auto& slopes : grid) {
        std::vector<Slope> shuffled = pool;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        slopes.assign(shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(per_index));
    }
    HyperbolicityOracle::Table table;
    std::bernoulli_distribution coin(0.3);
    for (const auto& m : grid_closure(grid)) {
        table[m] = coin(rng) ? Hyperbolicity::NonHyperbolic : Hyperbolicity::Hyperbolic;
    }
    return HyperbolicityOracle::from_table(grid, table);
}

}  // namespace

TEST(Multislope, ParseAndFormat) {
    Multislope m = M("(1/0, inf, -3/5)");
    ASSERT_EQ(m.size(), 3u);
    EXPECT_EQ(m.at(2), inf);
    EXPECT_EQ(to_string(m), "(1/0, inf, -3/5)");
    EXPECT_EQ(M("1/0,inf"), M("(1/0, inf)"));
    EXPECT_EQ(m.filled_count(), 2u);
    for (const char* bad : {"", "()", "(1/0", "(1/0, x)"}) {
        EXPECT_THROW(parse_multislope(bad), Error) << bad;
    }
}

TEST(PfLeq, Examples) {
    EXPECT_TRUE(pf_leq(M("(1/0, inf)"), M("(1/0, 3/5)")));
    EXPECT_TRUE(pf_leq(M("(1/0, 3/5)"), M("(1/0, 3/5)")));
    EXPECT_FALSE(pf_leq(M("(2/3, inf)"), M("(1/0, 3/5)")));
    try {
        pf_leq(M("(1/0)"), M("(1/0, inf)"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::LengthMismatch);
    }
}

TEST(PfLeq, IsPartialOrderOnGrid) {
    auto all = grid_closure(parse_grid_spec("1/0,2/3;0/1;1/1,1/2"));
    ASSERT_EQ(all.size(), 3u * 2u * 3u);
    for (const auto& a : all) {
        EXPECT_TRUE(pf_leq(a, a));
        for (const auto& b : all) {
            if (pf_leq(a, b) && pf_leq(b, a)) {
                EXPECT_EQ(a, b);
            }
            for (const auto& c : all) {
                if (pf_leq(a, b) && pf_leq(b, c)) {
                    EXPECT_TRUE(pf_leq(a, c));
                }
            }
        }
    }
}

TEST(Hat, Examples) {
    EXPECT_EQ(hat(M("(1/0, 3/5)"), 2), M("(1/0, inf)"));
    EXPECT_EQ(hat(M("(inf, 3/5)"), 1), M("(inf, 3/5)"));
    for (std::size_t bad : {0u, 3u}) {
        try {
            hat(M("(1/0, 3/5)"), bad);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange);
        }
    }
}

TEST(Hat, BelowAndIdempotentOnGrid) {
    for (const auto& a : grid_closure(parse_grid_spec("1/0,0/1;2/3;1/1,-1/1"))) {
        for (std::size_t i = 1; i <= a.size(); ++i) {
            EXPECT_TRUE(pf_leq(hat(a, i), a));
            EXPECT_EQ(hat(hat(a, i), i), hat(a, i));
        }
    }
}

TEST(Restriction, Examples) {
    Multislope a = M("(1/0, 3/5, inf)");
    EXPECT_EQ(restriction(a, {1, 2}), M("(1/0, 3/5)"));
    EXPECT_EQ(restriction(a, {1, 2, 3}), a);
    EXPECT_EQ(restriction(a, {3}), Multislope{inf});
    EXPECT_THROW(restriction(a, {4}), Error);
}

TEST(Restriction, ByLabelsFillsUncoveredWithInf) {
    Multislope a = M("(1/0, 3/5)");
    EXPECT_EQ(restriction(a, {"T1", "T2"}, {"T2", "F"}), M("(3/5, inf)"));
    try {
        restriction(a, {"T1"}, {"T1"});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::LengthMismatch);
    }
}

TEST(StrictPartialFillings, Examples) {
    auto list = strict_partial_fillings(M("(1/0, 3/5)"));
    EXPECT_EQ(list, (std::vector<Multislope>{M("(inf, 3/5)"), M("(1/0, inf)"), M("(inf, inf)")}));
    EXPECT_TRUE(strict_partial_fillings(M("(inf, inf, inf)")).empty());
}

TEST(StrictPartialFillings, CountLaw) {
    for (std::size_t n = 1; n <= 10; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            Multislope a;
            for (std::size_t i = 0; i < n; ++i) {
                a.entries.push_back(i < k ? FillingEntry::filled(make_slope(static_cast<long>(i), 1)) : inf);
            }
            auto list = strict_partial_fillings(a);
            ASSERT_EQ(list.size(), (std::size_t{1} << k) - 1);
            std::set<Multislope> distinct(list.begin(), list.end());
            EXPECT_EQ(distinct.size(), list.size());
            EXPECT_FALSE(distinct.count(a));
            for (const auto& b : list) {
                EXPECT_TRUE(pf_leq(b, a));
            }
        }
    }
}

TEST(IsMnh, WhiteheadExamples) {
    auto o = whitehead(parse_grid_spec("1/0,0/1,1/1,3/5,2/3;1/0,0/1,1/1,3/5,4/7"));
    EXPECT_TRUE(is_mnh(M("(1/0, inf)"), o).mnh);
    auto r = is_mnh(M("(1/0, 3/5)"), o);
    EXPECT_FALSE(r.mnh);
    EXPECT_EQ(r.witness, M("(1/0, inf)"));
    auto h = is_mnh(M("(2/3, 4/7)"), o);
    EXPECT_FALSE(h.mnh);
    EXPECT_EQ(h.witness, M("(2/3, 4/7)"));
}

TEST(IsMnh, OffGridQueriesThrow) {
    auto o = whitehead(whitehead_grid());
    for (const char* bad : {"(5/7, inf)", "(1/0)", "(1/0, inf, inf)"}) {
        try {
            is_mnh(M(bad), o);
            FAIL() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::OracleDomain);
        }
    }
}

TEST(FindAllMnh, Whitehead) {
    auto o = whitehead(whitehead_grid());
    auto report = find_all_mnh(whitehead_grid(), o);
    EXPECT_EQ(report.mnh, std::vector<Multislope>{M("(1/0, inf)")});
    EXPECT_EQ(report.rejected.size(), 15u);
}

TEST(FindAllMnh, AllHyperbolicIsEmpty) {
    auto o = HyperbolicityOracle::from_table(whitehead_grid(), {}, Hyperbolicity::Hyperbolic);
    EXPECT_TRUE(find_all_mnh(whitehead_grid(), o).mnh.empty());
}

TEST(FindAllMnh, OnlyAllInf) {
    SlopeGrid grid = parse_grid_spec("1/0,0/1;1/1;2/3");
    auto o = HyperbolicityOracle::from_table(grid, {{M("(inf, inf, inf)"), Hyperbolicity::NonHyperbolic}},
                                             Hyperbolicity::Hyperbolic);
    EXPECT_EQ(find_all_mnh(grid, o).mnh, std::vector<Multislope>{M("(inf, inf, inf)")});
}

TEST(FindAllMnh, TableGapIsOracleDomain) {
    auto o = HyperbolicityOracle::from_table(whitehead_grid(), {{M("(1/0, inf)"), Hyperbolicity::NonHyperbolic}});
    try {
        find_all_mnh(whitehead_grid(), o);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::OracleDomain);
    }
    EXPECT_THROW(o.validate_total(), Error);
}

TEST(FindAllMnh, MatchesPosetScanAndDescends) {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t arity = 1 + trial % 3;
        auto o = random_oracle(rng, arity, 1 + static_cast<std::size_t>(trial) % 3);
        auto all = grid_closure(o.grid());
        auto report = find_all_mnh(o.grid(), o);
        EXPECT_EQ(report.mnh, mnh_by_poset(all, o));
        EXPECT_EQ(report.mnh.size() + report.rejected.size(), all.size());
        for (const auto& rej : report.rejected) {
            const bool self = rej.witness == rej.candidate;
            EXPECT_TRUE(self ? o.hyperbolic(rej.candidate)
                             : pf_leq(rej.witness, rej.candidate) && !o.hyperbolic(rej.witness));
        }
        for (const auto& a : all) {
            auto below = mnh_partial_filling(a, o);
            if (o.hyperbolic(a)) {
                EXPECT_FALSE(below);
                continue;
            }
            ASSERT_TRUE(below);
            EXPECT_TRUE(pf_leq(*below, a));
            EXPECT_TRUE(std::find(report.mnh.begin(), report.mnh.end(), *below) != report.mnh.end());
        }
    }
}

TEST(TotallyHyperbolic, DualScan) {
    auto o = whitehead(whitehead_grid());
    EXPECT_TRUE(totally_hyperbolic(M("(0/1, 1/1)"), o));
    EXPECT_FALSE(totally_hyperbolic(M("(1/0, 1/1)"), o));
    for (const auto& a : grid_closure(whitehead_grid())) {
        bool any_non = !o.hyperbolic(a);
        for (const auto& b : grid_closure(whitehead_grid())) {
            if (pf_leq(b, a) && !o.hyperbolic(b)) {
                any_non = true;
            }
        }
        EXPECT_EQ(totally_hyperbolic(a, o), !any_non);
    }
}

TEST(GridSpec, RoundTrip) {
    SlopeGrid g = parse_grid_spec(" 1/0, 0/1 ; inf,2/3;");
    ASSERT_EQ(g.size(), 3u);
    EXPECT_EQ(g[0], (std::vector<Slope>{S("1/0"), S("0/1")}));
    EXPECT_EQ(g[1], std::vector<Slope>{S("2/3")});
    EXPECT_TRUE(g[2].empty());
    EXPECT_EQ(parse_grid_spec(format_grid_spec(g)), g);
    EXPECT_THROW(parse_grid_spec(""), Error);
}

TEST(OracleFile, ParsesTableAndDefault) {
    const char* text = R"(# Whitehead
grid 1/0,0/1,1/1;1/0,0/1,1/1
default H
(1/0, inf) N
(1/0, 1/0) N
(1/0, 0/1) N
(1/0, 1/1) N
)";
    auto o = parse_oracle_file(text);
    EXPECT_EQ(o.arity(), 2u);
    EXPECT_FALSE(o.hyperbolic(M("(1/0, 0/1)")));
    EXPECT_TRUE(o.hyperbolic(M("(0/1, 1/0)")));
    EXPECT_EQ(find_all_mnh(o.grid(), o).mnh, std::vector<Multislope>{M("(1/0, inf)")});
}

TEST(OracleFile, Rejects) {
    EXPECT_THROW(parse_oracle_file("(1/0) N\n"), Error);                       // no grid
    EXPECT_THROW(parse_oracle_file("grid 1/0\n(1/0) X\n"), Error);             // bad verdict
    EXPECT_THROW(parse_oracle_file("grid 1/0\n(1/0, inf) N\n"), Error);        // arity
    EXPECT_THROW(parse_oracle_file("grid 1/0\n(1/0) N\n(1/0) H\n"), Error);    // conflict
    auto o = parse_oracle_file("(1/0) N\n", parse_grid_spec("1/0"));
    EXPECT_FALSE(o.hyperbolic(M("(1/0)")));
}
