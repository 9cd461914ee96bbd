#pragma once

#include <optional>
#include <stdexcept>

#include "ctrldep/cfg.hpp"
#include "ctrldep/relations.hpp"

namespace ctrldep {

/// Θ(v, V'): nodes y of V' such that some path v ... y has all nodes before
/// y outside V'. Throws std::invalid_argument when v is in `vset`.
NodeSet theta(const Cfg &g, NodeIndex v, const NodeSet &vset);

enum class ClosureViolation {
    /// every maximal path from v reaches V' but Θ(v, V') has several elements
    theta_ambiguous,
    /// V' is reachable from v, yet some maximal path from v avoids it
    escapes_then_returns,
};

struct ClosureVerdict {
    bool closed = true;
    std::optional<NodeIndex> witness;
    std::optional<ClosureViolation> violation;
};

/*
 * V' is strongly control-closed iff every v outside V' that is reachable
 * from V' either cannot reach V' at all, or has V' on all its maximal paths
 * and |Θ(v, V')| <= 1. On failure the smallest-index violating node is
 * reported.
 */
ClosureVerdict is_strongly_control_closed(const Cfg &g, const NodeSet &vset);

/// Least V' containing `w` with: p ->ntscd n, n in V' => p in V'; and
/// p ->dod {a, b}, a and b in V' => p in V'.
NodeSet dependence_closure(const Cfg &g, const NodeSet &w, const NtscdRelation &ntscd,
                           const DodRelation &dod);

struct ClosureSpec {
    NodeSet w;
    NodeIndex start = 0;
    /// Skip the every-node-reachable-from-start check. The result is then
    /// not guaranteed to be minimal.
    bool allow_unreachable = false;
};

class ClosureError : public std::runtime_error {
public:
    enum class Kind { start_not_in_w, unreachable_nodes };
    ClosureError(Kind kind, const std::string &message) : std::runtime_error(message), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

struct ClosureResult {
    NodeSet nodes;
    bool best_effort = false;
};

/*
 * Strong control closure of spec.w computed as the NTSCD/DOD dependence
 * closure. Requires start in w and every node reachable from start, under
 * which closure under NTSCD and DOD coincides with being strongly
 * control-closed. Throws ClosureError when a precondition fails.
 */
ClosureResult strong_closure(const Cfg &g, const ClosureSpec &spec);

} // namespace ctrldep
