#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ctrldep/cfg.hpp"
#include "ctrldep/node_set.hpp"

namespace ctrldep {

/*
 * Backward coloring with per-node counters of not-yet-red successors.
 *
 * Seeds are colored red. Whenever a node turns red, the counter of each of
 * its predecessors is decremented (once per edge); an uncolored node whose
 * counter reaches zero turns red as well. Once propagation stops, a node is
 * red iff every maximal path from it contains a seed.
 *
 * The object owns the scratch arrays and may be reused for many runs over
 * the same graph. It is not safe to share one instance between threads.
 */
class PathColoring {
public:
    explicit PathColoring(const Cfg &g);

    /// Colors from `seeds` (must be non-empty) and returns the red nodes in
    /// the order they were colored.
    std::span<const NodeIndex> run(std::span<const NodeIndex> seeds);
    std::span<const NodeIndex> run(NodeIndex seed) { return run(std::span(&seed, 1)); }

    bool red(NodeIndex n) const { return color_[n] != 0; }
    std::span<const NodeIndex> red_nodes() const { return red_; }
    /// Counter decrements performed by the last run; never exceeds |E|.
    std::size_t visits() const { return visits_; }

private:
    const Cfg *g_;
    std::vector<std::uint32_t> out_degree_;
    std::vector<std::uint32_t> counter_;
    std::vector<std::uint8_t> color_;
    std::vector<NodeIndex> red_;
    std::vector<NodeIndex> stack_;
    std::size_t visits_ = 0;
};

/// { m | every maximal path from m contains a node of targets }.
/// Throws std::invalid_argument when targets is empty.
NodeSet color_all_paths_contain(const Cfg &g, const NodeSet &targets);

/// For every node n, V_n: the nodes lying on all maximal paths from n.
class VpMap {
public:
    VpMap() = default;
    explicit VpMap(std::vector<NodeSet> sets) : sets_(std::move(sets)) {}

    const NodeSet &operator[](NodeIndex n) const { return sets_[n]; }
    std::size_t size() const { return sets_.size(); }

    friend bool operator==(const VpMap &, const VpMap &) = default;

private:
    std::vector<NodeSet> sets_;
};

/// One coloring per node, accumulating the seed into V_m of each red m.
VpMap vp_sets(const Cfg &g);

/*
 * True iff every maximal path from `start` contains `first`, and no
 * occurrence of `then` precedes the first occurrence of `first`.
 * Throws std::invalid_argument when first == then.
 */
bool first_before_on_all(const Cfg &g, NodeIndex start, NodeIndex first, NodeIndex then);

/// Reachability from `start` in g with node `removed` deleted (start itself
/// is never deleted).
NodeSet reachable_avoiding(const Cfg &g, NodeIndex start, NodeIndex removed);

} // namespace ctrldep
