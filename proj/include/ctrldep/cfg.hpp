#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ctrldep/node_set.hpp"

namespace ctrldep {

/// Raised when a graph violates a structural constraint (duplicate label,
/// out-degree above two, edge to an undeclared node).
class CfgError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/*
 * Control flow graph: a finite directed graph where every node has at most
 * two outgoing edges. There is no start or exit node.
 *
 * Out-edges keep the order in which they were added. The order matters for
 * the worklist-based algorithms, whose results depend on successor iteration
 * order. Two edges to the same target are kept as given; such a node is not
 * a predicate.
 *
 * A Cfg is immutable once built; use CfgBuilder to construct one.
 */
class Cfg {
public:
    static constexpr std::size_t max_out_degree = 2;

    Cfg() = default;

    std::size_t size() const { return labels_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const std::string &label(NodeIndex n) const { return labels_[n]; }
    const std::vector<std::string> &labels() const { return labels_; }
    std::optional<NodeIndex> find(std::string_view label) const;
    /// Throws CfgError when the label is unknown.
    NodeIndex at(std::string_view label) const;

    std::span<const NodeIndex> successors(NodeIndex n) const { return succ_[n]; }
    /// Transpose of successors(), with multiplicity.
    std::span<const NodeIndex> predecessors(NodeIndex n) const { return pred_[n]; }

    /// Two out-edges with distinct targets.
    bool is_predicate(NodeIndex n) const {
        return succ_[n].size() == 2 && succ_[n][0] != succ_[n][1];
    }

    /// All edges in node order, then out-edge order.
    std::vector<std::pair<NodeIndex, NodeIndex>> edges() const;

    friend bool operator==(const Cfg &a, const Cfg &b) {
        return a.labels_ == b.labels_ && a.succ_ == b.succ_;
    }

private:
    friend class CfgBuilder;

    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeIndex> index_;
    std::vector<std::vector<NodeIndex>> succ_;
    std::vector<std::vector<NodeIndex>> pred_;
    std::size_t edge_count_ = 0;
};

class CfgBuilder {
public:
    /// Throws CfgError on a duplicate label.
    NodeIndex add_node(std::string label);
    /// Returns the existing index or declares a new node.
    NodeIndex node(std::string_view label);
    std::optional<NodeIndex> find(std::string_view label) const { return graph_.find(label); }

    /// Throws CfgError when src already has two out-edges.
    void add_edge(NodeIndex src, NodeIndex dst);
    void add_edge(std::string_view src, std::string_view dst);

    std::size_t size() const { return graph_.size(); }
    std::size_t out_degree(NodeIndex n) const { return graph_.succ_[n].size(); }

    Cfg build() &&;

private:
    Cfg graph_;
};

/// Nodes with exactly two distinct successors, ascending.
std::vector<NodeIndex> predicates(const Cfg &g);

/// All m with n reachable-to m, including n itself.
NodeSet reachable_set(const Cfg &g, NodeIndex n);

struct SccPartition {
    /// Component id per node. Ids are assigned in reverse topological order
    /// of the condensation: an edge u -> v implies component[u] >= component[v].
    std::vector<std::size_t> component;
    std::vector<std::vector<NodeIndex>> members;
    std::vector<bool> nontrivial;
    std::vector<bool> terminal;

    std::size_t count() const { return members.size(); }
};

/// Iterative Tarjan.
SccPartition sccs(const Cfg &g);

} // namespace ctrldep
