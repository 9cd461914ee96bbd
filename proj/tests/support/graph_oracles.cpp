#include "graph_oracles.hpp"

#include <set>

namespace graph_oracles {

using ctrldep::Cfg;
using ctrldep::NodeIndex;

std::vector<std::vector<bool>> reachability_matrix(const Cfg &g) {
    const auto n = g.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (NodeIndex a = 0; a < n; ++a) {
        reach[a][a] = true;
        for (auto s : g.successors(a)) {
            reach[a][s] = true;
        }
    }
    // Floyd-Warshall closure.
    for (NodeIndex k = 0; k < n; ++k) {
        for (NodeIndex i = 0; i < n; ++i) {
            if (!reach[i][k]) {
                continue;
            }
            for (NodeIndex j = 0; j < n; ++j) {
                if (reach[k][j]) {
                    reach[i][j] = true;
                }
            }
        }
    }
    return reach;
}

bool same_component(const std::vector<std::vector<bool>> &reach, NodeIndex a, NodeIndex b) {
    return reach[a][b] && reach[b][a];
}

bool on_cycle(const Cfg &g, NodeIndex a) {
    auto reach = reachability_matrix(g);
    for (auto s : g.successors(a)) {
        if (reach[s][a]) {
            return true;
        }
    }
    return false;
}

bool collapses_to_one_node(const Cfg &g) {
    const auto n = g.size();
    std::vector<std::set<NodeIndex>> succ(n);
    std::vector<std::set<NodeIndex>> pred(n);
    std::vector<bool> alive(n, true);
    for (NodeIndex v = 0; v < n; ++v) {
        for (auto s : g.successors(v)) {
            succ[v].insert(s);
            pred[s].insert(v);
        }
    }
    std::size_t remaining = n;
    bool changed = true;
    while (changed) {
        changed = false;
        for (NodeIndex v = 0; v < n; ++v) {
            if (alive[v] && succ[v].erase(v) > 0) {
                pred[v].erase(v);
                changed = true;
            }
        }
        for (NodeIndex v = 0; v < n; ++v) {
            if (!alive[v] || pred[v].size() != 1) {
                continue;
            }
            auto m = *pred[v].begin();
            if (m == v) {
                continue; // self-loop, removed on the next round
            }
            // merge v into m
            succ[m].erase(v);
            for (auto s : succ[v]) {
                pred[s].erase(v);
                pred[s].insert(m);
                succ[m].insert(s);
            }
            succ[v].clear();
            pred[v].clear();
            alive[v] = false;
            --remaining;
            changed = true;
        }
    }
    return remaining == 1;
}

} // namespace graph_oracles
