#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ctrldep/cfg.hpp"
#include "ctrldep/relations.hpp"

// Brute-force reference semantics for small graphs. Everything here is built
// from plain BFS/DFS over explicit subgraphs and deliberately shares no code
// with the counter-based coloring in maximal_paths.hpp, so the two can be
// checked against each other.
namespace ctrldep::oracle {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Budget {
    std::size_t max_nodes = 15;
};

/// Largest graph oracle_min_closure enumerates subsets of.
inline constexpr std::size_t closure_max_nodes = 10;

/*
 * Is there a maximal path from m that avoids every node of `avoid`? With the
 * avoided nodes deleted, that holds iff some node reachable from m is a sink
 * of the original graph or lies on a cycle. False when m itself is avoided.
 */
bool exists_maximal_avoiding_set(const Cfg &g, NodeIndex m, const std::vector<bool> &avoid,
                                 Budget budget = {});
bool exists_maximal_avoiding(const Cfg &g, NodeIndex m, NodeIndex n, Budget budget = {});

/// Every maximal path from s contains a, and none has b before the first a.
/// Throws std::invalid_argument when a == b.
bool first_before(const Cfg &g, NodeIndex s, NodeIndex a, NodeIndex b, Budget budget = {});

NtscdRelation ntscd(const Cfg &g, Budget budget = {});
DodRelation dod(const Cfg &g, Budget budget = {});

/// Direct evaluation of the strongly-control-closed definition.
bool is_strongly_control_closed(const Cfg &g, const std::vector<bool> &vset, Budget budget = {});

struct MinClosure {
    NodeSet nodes;
    /// Every inclusion-minimal strongly control-closed superset of w.
    std::vector<NodeSet> minimal;
    bool ambiguous() const { return minimal.size() > 1; }
};

/// Enumerates all supersets of w (|V| <= closure_max_nodes) and returns a
/// minimum-cardinality strongly control-closed one.
MinClosure min_closure(const Cfg &g, const NodeSet &w);

} // namespace ctrldep::oracle
