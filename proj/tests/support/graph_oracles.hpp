#pragma once

#include <vector>

#include "ctrldep/cfg.hpp"

// Deliberately naive graph facts used to check cfg-core and generators.
namespace graph_oracles {

/// reach[a][b]: b reachable from a by a path of length >= 0.
std::vector<std::vector<bool>> reachability_matrix(const ctrldep::Cfg &g);

/// Same-SCC relation from mutual reachability.
bool same_component(const std::vector<std::vector<bool>> &reach, ctrldep::NodeIndex a, ctrldep::NodeIndex b);

/// a lies on a cycle (a reaches itself through at least one edge).
bool on_cycle(const ctrldep::Cfg &g, ctrldep::NodeIndex a);

/// Removes self-loops and merges nodes with a single predecessor into it
/// until neither rule applies; true when one node remains.
bool collapses_to_one_node(const ctrldep::Cfg &g);

} // namespace graph_oracles
