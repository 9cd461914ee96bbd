#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "ctrldep/cfg.hpp"

namespace ctrldep {

/// Uniform draw from [0, bound) by rejection sampling. Unlike
/// std::uniform_int_distribution the result is identical on every standard
/// library, so generated graphs are reproducible across platforms.
std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound);

/// Largest edge count random_cfg accepts for `nodes` nodes.
std::size_t max_random_edges(std::size_t nodes);

/*
 * `nodes` nodes labelled "0".."nodes-1" and exactly `edges` edges, sources
 * drawn uniformly among nodes with a free out-slot and targets uniformly
 * among all nodes. A node never receives two edges to the same target, so
 * every node with two out-edges is a predicate. Self-loops are allowed.
 *
 * Throws std::invalid_argument when edges > max_random_edges(nodes).
 */
Cfg random_cfg(std::size_t nodes, std::size_t edges, std::uint64_t seed);

/*
 * Like random_cfg, but every node is reachable from node "0": a random
 * spanning arborescence rooted at "0" is laid down first and the remaining
 * edges are distributed as in random_cfg. Requires edges >= nodes - 1.
 */
Cfg random_rooted_cfg(std::size_t nodes, std::size_t edges, std::uint64_t seed);

/*
 * Structured graph built by recursive composition of sequence, if-then,
 * if-then-else and while blocks; `depth` bounds the nesting. Depth 0 is a
 * single node. The result has one entry node (label "0") and is reducible.
 */
Cfg random_reducible_cfg(std::size_t depth, std::uint64_t seed);

/*
 * A cycle c0 -> c1 -> ... -> c{k-1} -> c0 with k = total_nodes / 2, plus
 * predicates p0..p{k-1}, each with successors c0 and c{k/2}. Every predicate
 * splits the cycle into two strips of k/2 nodes, so the DOD relation has
 * total_nodes^3 / 32 triples.
 *
 * Throws std::invalid_argument unless total_nodes >= 8 and divisible by 4.
 */
Cfg worst_case_dod_cfg(std::size_t total_nodes);

/*
 * Between 3 and max_nodes nodes: a cycle of at least 2 nodes fed by an
 * acyclic front whose edges go to later front nodes or into the cycle, with
 * occasional chords on the cycle. Unlike random_cfg, these graphs often have
 * DOD pairs. Throws std::invalid_argument when max_nodes < 3.
 */
Cfg random_cycle_fed_cfg(std::size_t max_nodes, std::uint64_t seed);

} // namespace ctrldep
