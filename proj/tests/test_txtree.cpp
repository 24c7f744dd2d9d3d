#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fareykit/txtree.hpp"

using namespace fareykit;
using nlohmann::json;

namespace fareykit {
void PrintTo(ViolationKind k, std::ostream* os) { *os << to_string(k); }
}  // namespace fareykit

namespace {

std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::set<ViolationKind> kinds(const ValidationReport& r) {
    std::set<ViolationKind> out;
    for (const auto& v : r.violations) {
        out.insert(v.kind);
    }
    return out;
}

json node_doc(const char* id, const char* cls, int level, const char* parent = nullptr) {
    json n = {{"id", id}, {"class", cls}, {"level", level}, {"boundary_tori", 1}};
    n["parent"] = parent ? json(parent) : json(nullptr);
    return n;
}

TXTree chain(std::vector<const char*> volumes) {
    json nodes = json::array();
    for (std::size_t i = 0; i < volumes.size(); ++i) {
        std::string id = "H" + std::to_string(i);
        json n = node_doc(id.c_str(), "hyperbolic", static_cast<int>(3 * i));
        if (volumes[i]) {
            n["volume"] = volumes[i];
        }
        if (i > 0) {
            n["parent"] = "S" + std::to_string(i);
            n["edge_label"] = {{"kind", "torus-component"}};
            json s = node_doc(("S" + std::to_string(i)).c_str(), "jsj", static_cast<int>(3 * i - 1),
                              ("H" + std::to_string(i - 1)).c_str());
            s["edge_label"] = {{"kind", "mnh"}, {"multislope", "(1/0)"}};
            nodes.push_back(s);
        }
        nodes.push_back(n);
    }
    return parse_tree(json{{"schema", "txtree/1"}, {"nodes", nodes}}.dump());
}

}  // namespace

TEST(Rational, ParseAndFormat) {
    EXPECT_EQ(parse_rational("2.03"), Rational(203, 100));
    EXPECT_EQ(parse_rational("-1"), Rational(-1));
    EXPECT_EQ(parse_rational("1e-2"), Rational(1, 100));
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(format_rational(Rational(203, 100)), "2.03");
    EXPECT_EQ(format_rational(Rational(-1, 8)), "-0.125");
    EXPECT_EQ(format_rational(Rational(1, 3)), "1/3");
    EXPECT_EQ(format_rational(Rational(7)), "7");
    for (const char* bad : {"", "abc", "1/0", "1.2.3"}) {
        EXPECT_THROW(parse_rational(bad), Error) << bad;
    }
}

TEST(ParseTree, Singleton) {
    json doc = {{"schema", "txtree/1"}, {"nodes", json::array({node_doc("X", "hyperbolic", 0)})}};
    TXTree t = parse_tree(doc.dump());
    EXPECT_EQ(tree_size(t), 1u);
    EXPECT_TRUE(validate(t).ok());
}

TEST(ParseTree, DrilledDoubleExample) {
    TXTree t = parse_tree(read_fixture("drilled_double.json"));
    EXPECT_EQ(tree_size(t), 4u);
    EXPECT_EQ(t.root().id, "X0");
    EXPECT_EQ(t.children("X2").size(), 2u);
    EXPECT_EQ(t.node("X3b").volume, Rational(203, 100));
    auto report = validate(t);
    EXPECT_TRUE(report.ok()) << report.violations.front().message;
}

TEST(ParseTree, RoundTrip) {
    for (const char* name : {"drilled_double.json", "connected_sum.json"}) {
        TXTree t = parse_tree(read_fixture(name));
        EXPECT_EQ(parse_tree(format_tree(t)), t) << name;
    }
}

TEST(ParseTree, SchemaErrorsNameTheField) {
    json doc = json::parse(read_fixture("drilled_double.json"));
    auto expect_error = [](const json& d, const std::string& where) {
        try {
            parse_tree(d.dump());
            FAIL() << where;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::ParseError);
            EXPECT_NE(std::string(e.what()).find(where), std::string::npos) << e.what();
        }
    };
    json bad = doc;
    bad["nodes"][1]["level"] = "two";
    expect_error(bad, "nodes[1].level");
    bad = doc;
    bad["nodes"][2]["class"] = "spherical";
    expect_error(bad, "nodes[2].class");
    bad = doc;
    bad["nodes"][1]["edge_label"]["kind"] = "surgery";
    expect_error(bad, "nodes[1].edge_label.kind");
    bad = doc;
    bad["nodes"][1]["edge_label"]["multislope"] = "(1/0, x)";
    expect_error(bad, "nodes[1].edge_label.multislope");
    bad = doc;
    bad["schema"] = "txtree/2";
    expect_error(bad, "schema");
    bad = doc;
    bad["nodes"][3]["id"] = "X3a";
    expect_error(bad, "duplicate id");
    bad = doc;
    bad["nodes"][3]["parent"] = "Y";
    expect_error(bad, "nodes[3].parent");
    bad = doc;
    bad["nodes"][0]["parent"] = "X3a";
    expect_error(bad, "root");
    bad = doc;
    bad["nodes"][2]["parent"] = "X3b";
    bad["nodes"][3]["parent"] = "X3a";
    expect_error(bad, "cycle");
    EXPECT_THROW(parse_tree("{"), Error);
}

TEST(Validate, SingleFieldMutationsGiveOneViolationClass) {
    struct Mutation {
        const char* fixture;
        const char* pointer;
        json value;
        ViolationKind expected;
    };
    const std::vector<Mutation> mutations{
        {"drilled_double.json", "/nodes/0/level", 1, ViolationKind::LevelCongruence},
        {"drilled_double.json", "/nodes/2/level", 6, ViolationKind::LevelOrder},
        {"drilled_double.json", "/nodes/1/edge_label/kind", "prime-factor", ViolationKind::EdgeLabel},
        {"drilled_double.json", "/nodes/2/edge_label/kind", "mnh", ViolationKind::EdgeLabel},
        {"drilled_double.json", "/nodes/1/edge_label/multislope", "(1/0, inf)", ViolationKind::LabelArity},
        {"drilled_double.json", "/nodes/0/volume", "0", ViolationKind::VolumeClass},
        {"drilled_double.json", "/nodes/1/volume", "1.5", ViolationKind::VolumeClass},
        {"connected_sum.json", "/nodes/1/class", "seifert-fibered", ViolationKind::LeafRule},
        {"connected_sum.json", "/nodes/3/edge_label/kind", "torus-component", ViolationKind::EdgeLabel},
        {"connected_sum.json", "/nodes/2/edge_label/multislope", json::array({"1/2", "inf"}), ViolationKind::LabelArity},
        {"connected_sum.json", "/nodes/4/level", 6, ViolationKind::LevelOrder},
        {"connected_sum.json", "/nodes/2/class", "hyperbolic", ViolationKind::ChildClass},
        {"connected_sum.json", "/nodes/4/class", "sol", ViolationKind::ChildClass},
    };
    for (const auto& m : mutations) {
        json doc = json::parse(read_fixture(m.fixture));
        ASSERT_TRUE(validate(parse_tree(doc.dump())).ok()) << m.fixture;
        doc[json::json_pointer(m.pointer)] = m.value;
        auto report = validate(parse_tree(doc.dump()));
        EXPECT_EQ(kinds(report), std::set<ViolationKind>{m.expected}) << m.fixture << " " << m.pointer;
    }
}

TEST(Validate, RootLevelOnSingleton) {
    json doc = {{"schema", "txtree/1"}, {"nodes", json::array({node_doc("X", "hyperbolic", 3)})}};
    auto report = validate(parse_tree(doc.dump()));
    ASSERT_EQ(report.violations.size(), 1u);
    EXPECT_EQ(report.violations[0].kind, ViolationKind::RootLevel);
    EXPECT_EQ(report.violations[0].node, "X");
}

TEST(Validate, SeifertWithChildCitesLeafRule) {
    json doc = {{"schema", "txtree/1"},
                {"nodes", json::array({node_doc("F", "seifert-fibered", 0), node_doc("G", "reducible", 1, "F")})}};
    auto report = validate(parse_tree(doc.dump()));
    ASSERT_EQ(kinds(report), std::set<ViolationKind>{ViolationKind::LeafRule});
    EXPECT_EQ(report.violations[0].node, "F");
}

TEST(Validate, HyperbolicAtLevelOne) {
    json doc = {{"schema", "txtree/1"}, {"nodes", json::array({node_doc("X", "hyperbolic", 1)})}};
    EXPECT_EQ(kinds(validate(parse_tree(doc.dump()))), std::set<ViolationKind>{ViolationKind::LevelCongruence});
}

TEST(TreeSize, ProperSubtreesAreSmaller) {
    for (const char* name : {"drilled_double.json", "connected_sum.json"}) {
        TXTree t = parse_tree(read_fixture(name));
        for (const auto& n : t.nodes()) {
            TXTree sub = subtree(t, n.id);
            EXPECT_EQ(sub.root().id, n.id);
            if (n.parent) {
                EXPECT_LT(tree_size(sub), tree_size(t));
            } else {
                EXPECT_EQ(tree_size(sub), tree_size(t));
            }
        }
    }
    TXTree t = parse_tree(read_fixture("connected_sum.json"));
    EXPECT_EQ(tree_size(subtree(t, "H")), 2u);
    EXPECT_THROW(subtree(t, "nope"), Error);
}

TEST(VolumeChain, Examples) {
    auto ok = check_volume_chain(chain({"2.03", "1.01"}));
    EXPECT_TRUE(ok.ok());
    EXPECT_EQ(ok.pairs_checked, 1u);
    auto flat = check_volume_chain(chain({"1.0", "1.0"}));
    ASSERT_EQ(flat.violations.size(), 1u);
    EXPECT_EQ(flat.violations[0].ancestor, "H0");
    EXPECT_EQ(flat.violations[0].descendant, "H1");
    auto single = check_volume_chain(chain({nullptr}));
    EXPECT_TRUE(single.ok());
    EXPECT_EQ(single.pairs_checked, 0u);
    EXPECT_TRUE(check_volume_chain(chain({"3", "2", "1.5"})).ok());
    EXPECT_FALSE(check_volume_chain(chain({"3", "2", "2.5"})).ok());
}

TEST(VolumeChain, DrilledDoubleBranches) {
    auto report = check_volume_chain(parse_tree(read_fixture("drilled_double.json")));
    EXPECT_TRUE(report.ok());
    EXPECT_EQ(report.pairs_checked, 2u);
}

TEST(VolumeChain, MissingVolumeListsIds) {
    try {
        check_volume_chain(chain({"2", nullptr, "1"}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MissingVolume);
        EXPECT_NE(std::string(e.what()).find("H1"), std::string::npos);
    }
}
