#include "ctrldep/ntscd.hpp"

namespace ctrldep {

NtscdRelation ntscd_new(const Cfg &g) {
    const auto preds = predicates(g);
    PathColoring coloring(g);
    std::vector<NtscdPair> out;
    for (NodeIndex n = 0; n < g.size(); ++n) {
        coloring.run(n);
        for (auto p : preds) {
            auto succ = g.successors(p);
            if (coloring.red(succ[0]) != coloring.red(succ[1])) {
                out.push_back({p, n});
            }
        }
    }
    return NtscdRelation(std::move(out));
}

NtscdRelation ntscd_from_vp(const Cfg &g, const VpMap &vp) {
    std::vector<NtscdPair> out;
    for (auto p : predicates(g)) {
        auto succ = g.successors(p);
        const auto &first = vp[succ[0]];
        const auto &second = vp[succ[1]];
        auto differ = (first - second) | (second - first);
        differ.for_each([&](NodeIndex n) { out.push_back({p, n}); });
    }
    return NtscdRelation(std::move(out));
}

} // namespace ctrldep
