#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fareykit/fillings.hpp"

namespace fareykit {

using Rational = boost::multiprecision::cpp_rational;

/// "2.03", "-1", "203/100". Throws ParseError.
Rational parse_rational(std::string_view text);
/// Terminating decimals print as decimals, everything else as p/q.
std::string format_rational(const Rational& r);

enum class NodeClass { Hyperbolic, SeifertFibered, Sol, Reducible, JSJ };

/// "hyperbolic", "seifert-fibered", "sol", "reducible", "jsj"
std::string to_string(NodeClass c);
std::optional<NodeClass> parse_node_class(std::string_view text);

/// Level residue mod 3 that a class must sit on.
unsigned level_residue(NodeClass c);

enum class EdgeKind { Mnh, PrimeFactor, TorusComponent };

/// "mnh", "prime-factor", "torus-component"
std::string to_string(EdgeKind k);
std::optional<EdgeKind> parse_edge_kind(std::string_view text);

struct EdgeLabel {
    EdgeKind kind = EdgeKind::Mnh;
    /// The filling for mnh edges.
    std::optional<Multislope> multislope;

    friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

struct TXNode {
    std::string id;
    NodeClass cls = NodeClass::Hyperbolic;
    std::uint64_t level = 0;
    std::optional<Rational> volume;
    std::uint64_t boundary_tori = 0;
    std::optional<std::string> parent;
    std::optional<EdgeLabel> edge_label;

    friend bool operator==(const TXNode&, const TXNode&) = default;
};

/// Rooted tree of manifolds. Nodes are identified by id only.
class TXTree {
public:
    /// Throws ParseError on duplicate ids, dangling parents, zero or several
    /// roots, and cycles.
    static TXTree build(std::vector<TXNode> nodes);

    const std::vector<TXNode>& nodes() const noexcept { return nodes_; }
    const TXNode& root() const { return nodes_[root_]; }
    /// Throws IndexOutOfRange for unknown ids.
    const TXNode& node(std::string_view id) const;
    bool contains(std::string_view id) const;
    /// Children in document order.
    std::vector<const TXNode*> children(std::string_view id) const;
    std::size_t size() const noexcept { return nodes_.size(); }

    friend bool operator==(const TXTree& a, const TXTree& b) { return a.nodes_ == b.nodes_; }

private:
    std::vector<TXNode> nodes_;
    std::size_t root_ = 0;
    std::map<std::string, std::size_t, std::less<>> index_;
    std::vector<std::vector<std::size_t>> children_;
};

/**
 * JSON document:
 *
 *     {"schema": "txtree/1",
 *      "nodes": [{"id": "X0", "class": "hyperbolic", "level": 0, "volume": "2.03",
 *                 "boundary_tori": 3, "parent": null, "edge_label": null}, ...]}
 *
 * volume is a decimal or p/q string or a JSON number and may be omitted.
 * edge_label is {"kind": "mnh" | "prime-factor" | "torus-component",
 * "multislope": "(1/0, inf)"}; the multislope only appears on mnh edges.
 * Throws ParseError naming the offending field.
 */
TXTree parse_tree(std::string_view text);
std::string format_tree(const TXTree& tree);

enum class ViolationKind {
    LevelCongruence,
    LevelOrder,
    LeafRule,
    EdgeLabel,
    ChildClass,
    RootLevel,
    VolumeClass,
    LabelArity,
};

std::string to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    std::string node;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Violations in document order, node by node.
ValidationReport validate(const TXTree& tree);

std::size_t tree_size(const TXTree& tree);

/// The subtree hanging from id, with id as its root. Throws IndexOutOfRange.
TXTree subtree(const TXTree& tree, std::string_view id);

struct VolumeDrop {
    std::string ancestor;
    std::string descendant;
    Rational ancestor_volume;
    Rational descendant_volume;
};

struct VolumeChainReport {
    std::size_t pairs_checked = 0;
    /// Consecutive hyperbolic pairs on a branch whose volume does not drop.
    std::vector<VolumeDrop> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Compares every hyperbolic node with its nearest hyperbolic ancestor.
/// Throws MissingVolume listing every hyperbolic node in such a pair that has
/// no volume.
VolumeChainReport check_volume_chain(const TXTree& tree);

}  // namespace fareykit
