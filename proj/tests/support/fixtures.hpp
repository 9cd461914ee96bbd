#pragma once

#include <array>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ctrldep/cfg.hpp"
#include "ctrldep/relations.hpp"

namespace fixtures {

using ctrldep::Cfg;
using ctrldep::NodeIndex;
using ctrldep::NodeSet;

/// Builds a graph from (src, dst) label pairs in the given order; `nodes`
/// fixes the index order when given.
Cfg graph(std::initializer_list<std::pair<const char *, const char *>> edges,
          std::initializer_list<const char *> nodes = {});

Cfg loop_graph();
Cfg worklist_trap();
Cfg irreducible_pair();
/// irreducible_pair with an extra start node s -> a.
Cfg irreducible_pair_with_start();
Cfg formula_trap();
/// The configuration of the strip example: predicate p with successors
/// s1, s2 in front of the cycle n1 -> ... -> n8 -> n1.
Cfg strip_example();
Cfg chain3();

NodeSet set_of(const Cfg &g, std::initializer_list<const char *> labels);
NodeIndex at(const Cfg &g, const char *label);
std::vector<NodeIndex> indices(const Cfg &g, std::initializer_list<const char *> labels);

using Pairs = std::vector<std::array<std::string, 2>>;
using Triples = std::vector<std::array<std::string, 3>>;
using Labels = std::vector<std::string>;

/// Label tuples sorted for comparison against `labelled` output.
Pairs pairs(std::initializer_list<std::array<std::string, 2>> items);
Triples triples(std::initializer_list<std::array<std::string, 3>> items);
Labels labels(std::initializer_list<std::string> items);

} // namespace fixtures
