#include "fareykit/txtree.hpp"

#include <algorithm>
#include <regex>
#include <set>

#include <json.hpp>

namespace fareykit {

using nlohmann::json;

Rational parse_rational(std::string_view text) {
    static const std::regex decimal(R"(\s*([+-]?)(\d+)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*)");
    static const std::regex fraction(R"(\s*([+-]?\d+)\s*/\s*(\d+)\s*)");
    const std::string s(text);
    std::smatch m;
    if (std::regex_match(s, m, fraction)) {
        Integer den(m[2].str());
        if (den == 0) {
            throw Error(ErrorKind::ParseError, "zero denominator in '" + s + "'");
        }
        return Rational(Integer(m[1].str()), den);
    }
    if (!std::regex_match(s, m, decimal)) {
        throw Error(ErrorKind::ParseError, "not a number: '" + s + "'");
    }
    const std::string frac = m[3].str();
    Integer num(m[2].str() + frac);
    long long exponent = -static_cast<long long>(frac.size());
    if (m[4].matched) {
        exponent += std::stoll(m[4].str());
    }
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(std::llabs(exponent)));
    Rational r = exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
    return m[1].str() == "-" ? Rational(-r) : r;
}

std::string format_rational(const Rational& r) {
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    Integer rest = den;
    unsigned twos = 0, fives = 0;
    while (rest % 2 == 0) {
        rest /= 2;
        ++twos;
    }
    while (rest % 5 == 0) {
        rest /= 5;
        ++fives;
    }
    if (rest != 1) {
        return num.str() + "/" + den.str();
    }
    unsigned digits = std::max(twos, fives);
    if (digits == 0) {
        return num.str();
    }
    Integer scaled = abs(num) * (boost::multiprecision::pow(Integer(10), digits) / den);
    std::string body = scaled.str();
    if (body.size() <= digits) {
        body.insert(0, digits + 1 - body.size(), '0');
    }
    body.insert(body.size() - digits, ".");
    return (num < 0 ? "-" : "") + body;
}

std::string to_string(NodeClass c) {
    switch (c) {
    case NodeClass::Hyperbolic: return "hyperbolic";
    case NodeClass::SeifertFibered: return "seifert-fibered";
    case NodeClass::Sol: return "sol";
    case NodeClass::Reducible: return "reducible";
    case NodeClass::JSJ: return "jsj";
    }
    return "?";
}

std::optional<NodeClass> parse_node_class(std::string_view text) {
    for (NodeClass c : {NodeClass::Hyperbolic, NodeClass::SeifertFibered, NodeClass::Sol, NodeClass::Reducible,
                        NodeClass::JSJ}) {
        if (to_string(c) == text) {
            return c;
        }
    }
    return std::nullopt;
}

unsigned level_residue(NodeClass c) {
    switch (c) {
    case NodeClass::Reducible: return 1;
    case NodeClass::JSJ: return 2;
    default: return 0;
    }
}

std::string to_string(EdgeKind k) {
    switch (k) {
    case EdgeKind::Mnh: return "mnh";
    case EdgeKind::PrimeFactor: return "prime-factor";
    case EdgeKind::TorusComponent: return "torus-component";
    }
    return "?";
}

std::optional<EdgeKind> parse_edge_kind(std::string_view text) {
    for (EdgeKind k : {EdgeKind::Mnh, EdgeKind::PrimeFactor, EdgeKind::TorusComponent}) {
        if (to_string(k) == text) {
            return k;
        }
    }
    return std::nullopt;
}

TXTree TXTree::build(std::vector<TXNode> nodes) {
    TXTree t;
    t.nodes_ = std::move(nodes);
    if (t.nodes_.empty()) {
        throw Error(ErrorKind::ParseError, "tree has no nodes");
    }
    for (std::size_t i = 0; i < t.nodes_.size(); ++i) {
        const std::string& id = t.nodes_[i].id;
        if (id.empty()) {
            throw Error(ErrorKind::ParseError, "nodes[" + std::to_string(i) + "]: empty id");
        }
        if (!t.index_.emplace(id, i).second) {
            throw Error(ErrorKind::ParseError, "nodes[" + std::to_string(i) + "]: duplicate id '" + id + "'");
        }
    }
    t.children_.assign(t.nodes_.size(), {});
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < t.nodes_.size(); ++i) {
        const auto& parent = t.nodes_[i].parent;
        if (!parent) {
            roots.push_back(i);
            continue;
        }
        auto it = t.index_.find(*parent);
        if (it == t.index_.end()) {
            throw Error(ErrorKind::ParseError,
                        "nodes[" + std::to_string(i) + "].parent: unknown id '" + *parent + "'");
        }
        t.children_[it->second].push_back(i);
    }
    if (roots.size() != 1) {
        throw Error(ErrorKind::ParseError, "tree needs exactly one root, found " + std::to_string(roots.size()));
    }
    t.root_ = roots.front();
    std::vector<std::size_t> stack{t.root_};
    std::size_t reached = 0;
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        ++reached;
        stack.insert(stack.end(), t.children_[u].begin(), t.children_[u].end());
    }
    if (reached != t.nodes_.size()) {
        throw Error(ErrorKind::ParseError, "parent links contain a cycle");
    }
    return t;
}

const TXNode& TXTree::node(std::string_view id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
        throw Error(ErrorKind::IndexOutOfRange, "no node '" + std::string(id) + "'");
    }
    return nodes_[it->second];
}

bool TXTree::contains(std::string_view id) const { return index_.find(id) != index_.end(); }

std::vector<const TXNode*> TXTree::children(std::string_view id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
        throw Error(ErrorKind::IndexOutOfRange, "no node '" + std::string(id) + "'");
    }
    std::vector<const TXNode*> out;
    for (std::size_t c : children_[it->second]) {
        out.push_back(&nodes_[c]);
    }
    return out;
}

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
    throw Error(ErrorKind::ParseError, where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        schema_error(where, std::string("missing field '") + key + "'");
    }
    return *it;
}

std::uint64_t unsigned_field(const json& obj, const char* key, const std::string& where) {
    const json& v = field(obj, key, where);
    if (!v.is_number_unsigned()) {
        schema_error(where + "." + key, "expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

Rational volume_value(const json& v, const std::string& where) {
    try {
        if (v.is_string()) {
            return parse_rational(v.get<std::string>());
        }
        if (v.is_number()) {
            // dump() gives the shortest text that round-trips, e.g. 2.03.
            return parse_rational(v.dump());
        }
    } catch (const Error& e) {
        schema_error(where, e.what());
    }
    schema_error(where, "expected a number or numeric string");
}

EdgeLabel edge_label_value(const json& v, const std::string& where) {
    if (!v.is_object()) {
        schema_error(where, "expected an object or null");
    }
    const json& kind = field(v, "kind", where);
    std::optional<EdgeKind> k = kind.is_string() ? parse_edge_kind(kind.get<std::string>()) : std::nullopt;
    if (!k) {
        schema_error(where + ".kind", "expected mnh, prime-factor or torus-component");
    }
    EdgeLabel label{*k, std::nullopt};
    auto ms = v.find("multislope");
    if (ms != v.end() && !ms->is_null()) {
        const std::string at = where + ".multislope";
        if (!ms->is_string() && !ms->is_array()) {
            schema_error(at, "expected a string or array");
        }
        try {
            if (ms->is_string()) {
                label.multislope = parse_multislope(ms->get<std::string>());
            } else {
                Multislope m;
                for (const auto& e : *ms) {
                    m.entries.push_back(parse_filling_entry(e.get<std::string>()));
                }
                label.multislope = std::move(m);
            }
        } catch (const Error& e) {
            schema_error(at, e.what());
        } catch (const json::exception& e) {
            schema_error(at, e.what());
        }
    }
    return label;
}

TXNode node_value(const json& v, std::size_t i) {
    const std::string where = "nodes[" + std::to_string(i) + "]";
    if (!v.is_object()) {
        schema_error(where, "expected an object");
    }
    TXNode n;
    const json& id = field(v, "id", where);
    if (!id.is_string()) {
        schema_error(where + ".id", "expected a string");
    }
    n.id = id.get<std::string>();
    const json& cls = field(v, "class", where);
    auto c = cls.is_string() ? parse_node_class(cls.get<std::string>()) : std::nullopt;
    if (!c) {
        schema_error(where + ".class", "expected hyperbolic, seifert-fibered, sol, reducible or jsj");
    }
    n.cls = *c;
    n.level = unsigned_field(v, "level", where);
    n.boundary_tori = unsigned_field(v, "boundary_tori", where);
    if (auto vol = v.find("volume"); vol != v.end() && !vol->is_null()) {
        n.volume = volume_value(*vol, where + ".volume");
    }
    if (auto p = v.find("parent"); p != v.end() && !p->is_null()) {
        if (!p->is_string()) {
            schema_error(where + ".parent", "expected a string or null");
        }
        n.parent = p->get<std::string>();
    }
    if (auto e = v.find("edge_label"); e != v.end() && !e->is_null()) {
        n.edge_label = edge_label_value(*e, where + ".edge_label");
    }
    return n;
}

}  // namespace

TXTree parse_tree(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        schema_error("document", "expected an object");
    }
    const json& schema = field(doc, "schema", "document");
    if (schema != "txtree/1") {
        schema_error("schema", "expected \"txtree/1\"");
    }
    const json& nodes = field(doc, "nodes", "document");
    if (!nodes.is_array()) {
        schema_error("nodes", "expected an array");
    }
    std::vector<TXNode> out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        out.push_back(node_value(nodes[i], i));
    }
    return TXTree::build(std::move(out));
}

std::string format_tree(const TXTree& tree) {
    json nodes = json::array();
    for (const auto& n : tree.nodes()) {
        json j = {{"id", n.id}, {"class", to_string(n.cls)}, {"level", n.level}, {"boundary_tori", n.boundary_tori}};
        j["volume"] = n.volume ? json(format_rational(*n.volume)) : json(nullptr);
        j["parent"] = n.parent ? json(*n.parent) : json(nullptr);
        if (n.edge_label) {
            json e = {{"kind", to_string(n.edge_label->kind)}};
            if (n.edge_label->multislope) {
                e["multislope"] = to_string(*n.edge_label->multislope);
            }
            j["edge_label"] = e;
        } else {
            j["edge_label"] = nullptr;
        }
        nodes.push_back(j);
    }
    json doc = {{"schema", "txtree/1"}, {"nodes", nodes}};
    return doc.dump(2) + "\n";
}

std::string to_string(ViolationKind k) {
    switch (k) {
    case ViolationKind::LevelCongruence: return "LevelCongruence";
    case ViolationKind::LevelOrder: return "LevelOrder";
    case ViolationKind::LeafRule: return "LeafRule";
    case ViolationKind::EdgeLabel: return "EdgeLabel";
    case ViolationKind::ChildClass: return "ChildClass";
    case ViolationKind::RootLevel: return "RootLevel";
    case ViolationKind::VolumeClass: return "VolumeClass";
    case ViolationKind::LabelArity: return "LabelArity";
    }
    return "?";
}

namespace {

std::optional<EdgeKind> expected_edge(NodeClass parent) {
    switch (parent) {
    case NodeClass::Hyperbolic: return EdgeKind::Mnh;
    case NodeClass::Reducible: return EdgeKind::PrimeFactor;
    case NodeClass::JSJ: return EdgeKind::TorusComponent;
    default: return std::nullopt;
    }
}

bool child_allowed(NodeClass parent, NodeClass child) {
    switch (parent) {
    case NodeClass::Hyperbolic: return child != NodeClass::Hyperbolic;
    case NodeClass::Reducible: return child != NodeClass::Reducible;
    case NodeClass::JSJ: return child == NodeClass::Hyperbolic || child == NodeClass::SeifertFibered;
    default: return true;
    }
}

}  // namespace

ValidationReport validate(const TXTree& tree) {
    ValidationReport report;
    auto add = [&](ViolationKind k, const TXNode& n, std::string msg) {
        report.violations.push_back({k, n.id, std::move(msg)});
    };
    for (const auto& n : tree.nodes()) {
        const std::string lvl = std::to_string(n.level);
        if (n.level % 3 != level_residue(n.cls)) {
            add(ViolationKind::LevelCongruence, n,
                to_string(n.cls) + " node at level " + lvl + " (needs level = " +
                    std::to_string(level_residue(n.cls)) + " mod 3)");
        }
        if (n.volume && (n.cls != NodeClass::Hyperbolic || *n.volume <= 0)) {
            add(ViolationKind::VolumeClass, n,
                n.cls != NodeClass::Hyperbolic ? "volume on a " + to_string(n.cls) + " node"
                                               : "non-positive volume " + format_rational(*n.volume));
        }
        if ((n.cls == NodeClass::SeifertFibered || n.cls == NodeClass::Sol) && !tree.children(n.id).empty()) {
            add(ViolationKind::LeafRule, n, to_string(n.cls) + " node has " + std::to_string(tree.children(n.id).size()) +
                                                " children");
        }
        if (!n.parent) {
            if (n.level > 2) {
                add(ViolationKind::RootLevel, n, "root at level " + lvl);
            }
            if (n.edge_label) {
                add(ViolationKind::EdgeLabel, n, "root carries an edge label");
            }
            continue;
        }
        const TXNode& p = tree.node(*n.parent);
        const std::uint64_t block_end = p.level / 3 * 3 + 3;
        if (n.level <= p.level || n.level > block_end) {
            add(ViolationKind::LevelOrder, n,
                "level " + lvl + " under a level " + std::to_string(p.level) + " parent (allowed " +
                    std::to_string(p.level + 1) + ".." + std::to_string(block_end) + ")");
        }
        if (auto want = expected_edge(p.cls)) {
            if (!n.edge_label) {
                add(ViolationKind::EdgeLabel, n, "missing " + to_string(*want) + " edge label");
            } else if (n.edge_label->kind != *want) {
                add(ViolationKind::EdgeLabel, n,
                    to_string(n.edge_label->kind) + " edge under a " + to_string(p.cls) + " node (needs " +
                        to_string(*want) + ")");
            } else if (*want == EdgeKind::Mnh && !n.edge_label->multislope) {
                add(ViolationKind::EdgeLabel, n, "mnh edge without a multislope");
            } else if (*want != EdgeKind::Mnh && n.edge_label->multislope) {
                add(ViolationKind::EdgeLabel, n, to_string(*want) + " edge carries a multislope");
            }
        }
        if (n.edge_label && n.edge_label->kind == EdgeKind::Mnh && n.edge_label->multislope &&
            n.edge_label->multislope->size() != p.boundary_tori) {
            add(ViolationKind::LabelArity, n,
                "multislope of length " + std::to_string(n.edge_label->multislope->size()) + " on a parent with " +
                    std::to_string(p.boundary_tori) + " boundary tori");
        }
        if (!child_allowed(p.cls, n.cls)) {
            add(ViolationKind::ChildClass, n, to_string(n.cls) + " child of a " + to_string(p.cls) + " node");
        }
    }
    return report;
}

std::size_t tree_size(const TXTree& tree) { return tree.size(); }

TXTree subtree(const TXTree& tree, std::string_view id) {
    std::set<std::string, std::less<>> keep{std::string(tree.node(id).id)};
    // Parents precede children in a breadth-first sweep.
    std::vector<std::string> frontier{std::string(id)};
    while (!frontier.empty()) {
        std::vector<std::string> next;
        for (const auto& u : frontier) {
            for (const TXNode* c : tree.children(u)) {
                keep.insert(c->id);
                next.push_back(c->id);
            }
        }
        frontier.swap(next);
    }
    std::vector<TXNode> nodes;
    for (const auto& n : tree.nodes()) {
        if (keep.count(n.id)) {
            nodes.push_back(n);
            if (n.id == id) {
                nodes.back().parent.reset();
                nodes.back().edge_label.reset();
            }
        }
    }
    return TXTree::build(std::move(nodes));
}

VolumeChainReport check_volume_chain(const TXTree& tree) {
    std::vector<std::pair<const TXNode*, const TXNode*>> pairs;
    for (const auto& n : tree.nodes()) {
        if (n.cls != NodeClass::Hyperbolic) {
            continue;
        }
        const TXNode* up = &n;
        while (up->parent) {
            up = &tree.node(*up->parent);
            if (up->cls == NodeClass::Hyperbolic) {
                pairs.emplace_back(up, &n);
                break;
            }
        }
    }
    std::vector<std::string> missing;
    for (const auto& n : tree.nodes()) {
        bool paired = std::any_of(pairs.begin(), pairs.end(),
                                  [&](const auto& pr) { return pr.first == &n || pr.second == &n; });
        if (paired && !n.volume) {
            missing.push_back(n.id);
        }
    }
    if (!missing.empty()) {
        std::string ids;
        for (const auto& m : missing) {
            ids += (ids.empty() ? "" : ", ") + m;
        }
        throw Error(ErrorKind::MissingVolume, "hyperbolic nodes without volume: " + ids);
    }
    VolumeChainReport report;
    for (const auto& [a, d] : pairs) {
        ++report.pairs_checked;
        if (!(*d->volume < *a->volume)) {
            report.violations.push_back({a->id, d->id, *a->volume, *d->volume});
        }
    }
    return report;
}

}  // namespace fareykit
