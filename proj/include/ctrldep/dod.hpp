#pragma once

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ctrldep/cfg.hpp"
#include "ctrldep/maximal_paths.hpp"
#include "ctrldep/relations.hpp"

namespace ctrldep {

/// A structural property that the theory guarantees did not hold. Always a
/// bug in this library, never a property of the input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/*
 * Projection graph A_p over V_p: an edge (x, y) for every V_p-interval from
 * x to y in the CFG, i.e. a path x ... y with at least one edge whose
 * interior avoids V_p.
 */
class ProjectionGraph {
public:
    NodeIndex predicate() const { return predicate_; }
    /// V_p in ascending index order.
    std::span<const NodeIndex> nodes() const { return nodes_; }
    bool contains(NodeIndex n) const { return n < slot_.size() && slot_[n] != npos; }
    /// Successors in A_p, ascending. `n` must be a member.
    std::span<const NodeIndex> successors(NodeIndex n) const { return succ_[slot_[n]]; }
    std::vector<std::pair<NodeIndex, NodeIndex>> edges() const;

private:
    friend ProjectionGraph build_ap(const Cfg &, NodeIndex, const NodeSet &);
    static constexpr std::uint32_t npos = 0xffffffffu;

    NodeIndex predicate_ = 0;
    std::vector<NodeIndex> nodes_;
    std::vector<std::uint32_t> slot_;
    std::vector<std::vector<NodeIndex>> succ_;
};

/// A depth-first search from every member of V_p, stopped at V_p members.
ProjectionGraph build_ap(const Cfg &g, NodeIndex p, const NodeSet &vp_of_p);

enum class NodeClass { first, second, both, neither };

/*
 * V1 and V2: the V_p nodes first-reachable (through nodes outside V_p) from
 * the first and second successor of p. A successor that is itself in V_p is
 * its own first-reachable node. U is the rest of V_p without p.
 */
struct SuccessorClasses {
    std::vector<NodeIndex> first;
    std::vector<NodeIndex> second;
    std::vector<NodeIndex> neither;

    NodeClass classify(NodeIndex n) const;
    bool disjoint() const;
};

SuccessorClasses compute_v1_v2(const Cfg &g, NodeIndex p, const NodeSet &vp_of_p);

/// The cycle A_p minus p, read from the smallest-label node of `start_set`.
/// Throws InvariantViolation if the non-p part of `ap` is not a single cycle.
std::vector<NodeIndex> unfold_cycle(const Cfg &g, const ProjectionGraph &ap,
                                    std::span<const NodeIndex> start_set);
/// Same, from a given cycle node.
std::vector<NodeIndex> unfold_cycle_from(const ProjectionGraph &ap, NodeIndex start);

/*
 * Does the unfolding, which starts with a V1 node, belong to
 *   (V1.U*)* . V1.U* . (V2.U*)* . V2.U* . (V1.U*)*  ?
 * Ignoring U nodes that is V1+ V2+ V1*, checked in one pass.
 * Requires V1 and V2 to be disjoint.
 */
bool match_unfolding_pattern(std::span<const NodeIndex> seq, const SuccessorClasses &classes);

/*
 * For a matching unfolding: the unique cycle path V1.U*.V2 without its last
 * node, and the unique path V2.U*.V1 (which may wrap around the end of the
 * unfolding) without its last node.
 */
struct StripSegments {
    std::vector<NodeIndex> m_segment;
    std::vector<NodeIndex> o_segment;
};

StripSegments extract_segments(std::span<const NodeIndex> seq, const SuccessorClasses &classes);

/// DOD triples whose predicate is `p`. `vp` must be vp_sets(g).
std::vector<DodTriple> dod_for_predicate(const Cfg &g, NodeIndex p, const VpMap &vp);

/// Decisive order dependence via projection graphs. O(|V|^3).
DodRelation dod_new(const Cfg &g);

struct DodAndNtscd {
    DodRelation dod;
    NtscdRelation ntscd;
};

/// dod_new together with NTSCD from the same V_n sets.
DodAndNtscd dod_and_ntscd(const Cfg &g);

enum class FormulaVariant {
    /// reachable(a, b): b is reachable from a.
    original,
    /// reachable(a, b): b lies on all maximal paths from a.
    fixed
};

/*
 * Triple enumeration over every predicate p and pair {a, b} of distinct
 * non-p nodes, reporting
 *   reachable(a, b) && reachable(b, a) && dependence(p, a, b)
 * where dependence asks first_before_on_all from one successor for (a, b) and
 * from the other for (b, a).
 */
DodRelation dod_formula(const Cfg &g, FormulaVariant variant);

} // namespace ctrldep
