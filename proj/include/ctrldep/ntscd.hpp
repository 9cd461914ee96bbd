#pragma once

#include <cstdint>
#include <vector>

#include "ctrldep/cfg.hpp"
#include "ctrldep/maximal_paths.hpp"
#include "ctrldep/relations.hpp"

namespace ctrldep {

/// Non-termination sensitive control dependence by backward coloring: for
/// each node n, color from {n} and report every predicate with one red and
/// one uncolored successor. O(|V|^2) on CFGs.
NtscdRelation ntscd_new(const Cfg &g);

/// NTSCD from precomputed V_n sets: p -> n for n in the symmetric difference
/// of V_{s1} and V_{s2}. `vp` must be vp_sets(g).
NtscdRelation ntscd_from_vp(const Cfg &g, const VpMap &vp);

/// Order in which the original worklist algorithm pops its workbag.
struct WorklistPolicy {
    enum class Kind { fifo, lifo, explicit_order };

    Kind kind = Kind::fifo;
    /// For explicit_order: the bag always yields its member listed first here.
    /// Every node that is ever pushed must be listed.
    std::vector<NodeIndex> order;

    static WorklistPolicy fifo() { return {}; }
    static WorklistPolicy lifo() { return {Kind::lifo, {}}; }
    static WorklistPolicy explicit_order(std::vector<NodeIndex> order) {
        return {Kind::explicit_order, std::move(order)};
    }
};

/*
 * The array S of the forward worklist algorithm. For node n and predicate p
 * with out-edges (p, r0), (p, r1), S[n, p] is a subset of {t_p,r0, t_p,r1}
 * encoded as a 2-bit mask: bit i stands for the symbol of out-edge slot i.
 */
class SymbolTable {
public:
    SymbolTable() = default;
    explicit SymbolTable(const Cfg &g);

    std::uint8_t cell(NodeIndex n, NodeIndex p) const { return cells_[n * width_ + column_[p]]; }
    std::uint8_t &cell(NodeIndex n, NodeIndex p) { return cells_[n * width_ + column_[p]]; }

    /// Successors r of p with t_pr in S[n, p], in out-edge order.
    std::vector<NodeIndex> symbols(const Cfg &g, NodeIndex n, NodeIndex p) const;

    const std::vector<NodeIndex> &predicates() const { return predicates_; }

    friend bool operator==(const SymbolTable &, const SymbolTable &) = default;

private:
    std::vector<NodeIndex> predicates_;
    std::vector<std::uint32_t> column_;
    std::size_t width_ = 0;
    std::vector<std::uint8_t> cells_;
};

struct RanganathRun {
    SymbolTable table;
    NtscdRelation relation;
    /// Workbag pops (worklist variant) or full passes (fixpoint variant).
    std::size_t steps = 0;
};

/// The original forward worklist algorithm. Its result depends on the
/// popping policy and can be wrong; the final S is sound but may be
/// incomplete. Throws std::invalid_argument when an explicit order does not
/// list a node that gets pushed.
RanganathRun run_ranganath(const Cfg &g, const WorklistPolicy &policy);
NtscdRelation ntscd_ranganath(const Cfg &g, const WorklistPolicy &policy = WorklistPolicy::fifo());

enum class PassOrder { ascending, descending };

/// The same loop body applied to every node, pass after pass, until S stops
/// changing. O(|V|^5).
RanganathRun run_ranganath_fixed(const Cfg &g, PassOrder order = PassOrder::ascending);
NtscdRelation ntscd_ranganath_fixed(const Cfg &g, PassOrder order = PassOrder::ascending);

} // namespace ctrldep
