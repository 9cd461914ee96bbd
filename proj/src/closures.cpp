#include "ctrldep/closures.hpp"

#include <vector>

#include "ctrldep/dod.hpp"
#include "ctrldep/maximal_paths.hpp"

namespace ctrldep {

NodeSet theta(const Cfg &g, NodeIndex v, const NodeSet &vset) {
    if (vset.contains(v)) {
        throw std::invalid_argument("theta: v must lie outside the set");
    }
    NodeSet found(g.size());
    NodeSet seen(g.size());
    seen.insert(v);
    std::vector<NodeIndex> queue{v};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (auto s : g.successors(queue[head])) {
            if (vset.contains(s)) {
                found.insert(s);
            } else if (!seen.contains(s)) {
                seen.insert(s);
                queue.push_back(s);
            }
        }
    }
    return found;
}

ClosureVerdict is_strongly_control_closed(const Cfg &g, const NodeSet &vset) {
    if (vset.empty()) {
        return {};
    }

    // Outside nodes reachable from the set.
    NodeSet from_set(g.size());
    std::vector<NodeIndex> stack = vset.to_vector();
    while (!stack.empty()) {
        auto n = stack.back();
        stack.pop_back();
        for (auto s : g.successors(n)) {
            if (!vset.contains(s) && !from_set.contains(s)) {
                from_set.insert(s);
                stack.push_back(s);
            }
        }
    }

    const auto all_paths_hit = color_all_paths_contain(g, vset);
    ClosureVerdict verdict;
    from_set.for_each([&](NodeIndex v) {
        if (!verdict.closed) {
            return;
        }
        auto first_hits = theta(g, v, vset);
        if (first_hits.empty()) {
            return;
        }
        if (!all_paths_hit.contains(v)) {
            verdict = {false, v, ClosureViolation::escapes_then_returns};
        } else if (first_hits.count() > 1) {
            verdict = {false, v, ClosureViolation::theta_ambiguous};
        }
    });
    return verdict;
}

NodeSet dependence_closure(const Cfg &g, const NodeSet &w, const NtscdRelation &ntscd,
                           const DodRelation &dod) {
    std::vector<std::vector<NodeIndex>> controllers(g.size());
    for (const auto &e : ntscd) {
        controllers[e.node].push_back(e.predicate);
    }
    // member -> (predicate, other member)
    std::vector<std::vector<std::pair<NodeIndex, NodeIndex>>> partners(g.size());
    for (const auto &t : dod) {
        partners[t.first].emplace_back(t.predicate, t.second);
        partners[t.second].emplace_back(t.predicate, t.first);
    }

    NodeSet closure = w;
    std::vector<NodeIndex> work = w.to_vector();
    auto add = [&](NodeIndex n) {
        if (!closure.contains(n)) {
            closure.insert(n);
            work.push_back(n);
        }
    };
    while (!work.empty()) {
        auto n = work.back();
        work.pop_back();
        for (auto p : controllers[n]) {
            add(p);
        }
        for (auto [p, other] : partners[n]) {
            if (closure.contains(other)) {
                add(p);
            }
        }
    }
    return closure;
}

ClosureResult strong_closure(const Cfg &g, const ClosureSpec &spec) {
    if (!spec.w.contains(spec.start)) {
        throw ClosureError(ClosureError::Kind::start_not_in_w,
                           "start node '" + g.label(spec.start) + "' is not in the criterion");
    }
    ClosureResult result;
    auto reach = reachable_set(g, spec.start);
    if (reach.count() != g.size()) {
        if (!spec.allow_unreachable) {
            throw ClosureError(ClosureError::Kind::unreachable_nodes,
                               std::to_string(g.size() - reach.count()) +
                                   " node(s) are unreachable from start '" + g.label(spec.start) + "'");
        }
        result.best_effort = true;
    }
    auto deps = dod_and_ntscd(g);
    result.nodes = dependence_closure(g, spec.w, deps.ntscd, deps.dod);
    return result;
}

} // namespace ctrldep
