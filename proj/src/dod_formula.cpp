// Triple-enumeration DOD in the style of the original algorithm, with either
// the original (plain reachability) or the corrected `reachable` check.

#include <unordered_map>

#include "ctrldep/dod.hpp"

namespace ctrldep {

namespace {

// first_before_on_all with the colorings replaced by V_n lookups and the
// avoiding-reachability sets memoized per (start, first).
class FirstBefore {
public:
    FirstBefore(const Cfg &g, const VpMap &vp) : g_(g), vp_(vp) {}

    bool operator()(NodeIndex start, NodeIndex first, NodeIndex then) {
        if (!vp_[start].contains(first)) {
            return false;
        }
        if (start == first) {
            return true;
        }
        if (start == then) {
            return false;
        }
        auto key = (static_cast<std::uint64_t>(start) << 32) | first;
        auto it = avoiding_.find(key);
        if (it == avoiding_.end()) {
            it = avoiding_.emplace(key, reachable_avoiding(g_, start, first)).first;
        }
        return !it->second.contains(then);
    }

private:
    const Cfg &g_;
    const VpMap &vp_;
    std::unordered_map<std::uint64_t, NodeSet> avoiding_;
};

} // namespace

DodRelation dod_formula(const Cfg &g, FormulaVariant variant) {
    const auto vp = vp_sets(g);

    // reachable(a, b) is reach[a].contains(b)
    std::vector<NodeSet> reach;
    if (variant == FormulaVariant::original) {
        reach.reserve(g.size());
        for (NodeIndex a = 0; a < g.size(); ++a) {
            reach.push_back(reachable_set(g, a));
        }
    }
    auto reachable = [&](NodeIndex a, NodeIndex b) {
        return variant == FormulaVariant::original ? reach[a].contains(b) : vp[a].contains(b);
    };

    FirstBefore first_before(g, vp);
    std::vector<DodTriple> out;
    const auto n = static_cast<NodeIndex>(g.size());
    for (auto p : predicates(g)) {
        auto s1 = g.successors(p)[0];
        auto s2 = g.successors(p)[1];
        auto dependence = [&](NodeIndex a, NodeIndex b) {
            return (first_before(s1, a, b) && first_before(s2, b, a)) ||
                   (first_before(s1, b, a) && first_before(s2, a, b));
        };
        for (NodeIndex a = 0; a < n; ++a) {
            if (a == p) {
                continue;
            }
            for (NodeIndex b = a + 1; b < n; ++b) {
                if (b == p || !reachable(a, b) || !reachable(b, a)) {
                    continue;
                }
                if (dependence(a, b)) {
                    out.push_back(DodTriple::make(p, a, b));
                }
            }
        }
    }
    return DodRelation(std::move(out));
}

} // namespace ctrldep
