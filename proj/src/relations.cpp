#include "ctrldep/relations.hpp"

namespace ctrldep {

std::vector<std::array<std::string, 2>> labelled(const Cfg &g, const NtscdRelation &r) {
    std::vector<std::array<std::string, 2>> out;
    out.reserve(r.size());
    for (const auto &e : r) {
        out.push_back({g.label(e.predicate), g.label(e.node)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::array<std::string, 3>> labelled(const Cfg &g, const DodRelation &r) {
    std::vector<std::array<std::string, 3>> out;
    out.reserve(r.size());
    for (const auto &t : r) {
        const auto &a = g.label(t.first);
        const auto &b = g.label(t.second);
        if (a < b) {
            out.push_back({g.label(t.predicate), a, b});
        } else {
            out.push_back({g.label(t.predicate), b, a});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> labelled(const Cfg &g, const NodeSet &s) {
    std::vector<std::string> out;
    s.for_each([&](NodeIndex n) { out.push_back(g.label(n)); });
    std::sort(out.begin(), out.end());
    return out;
}

std::string format_tuple(const std::array<std::string, 2> &t) {
    return "(" + t[0] + "," + t[1] + ")";
}

std::string format_tuple(const std::array<std::string, 3> &t) {
    return "(" + t[0] + "," + t[1] + "," + t[2] + ")";
}

} // namespace ctrldep
