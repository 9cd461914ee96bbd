#include "ctrldep/oracle.hpp"

#include <algorithm>
#include <string>

namespace ctrldep::oracle {

namespace {

void check_budget(const Cfg &g, Budget budget) {
    if (g.size() > budget.max_nodes) {
        throw BudgetExceeded("oracle budget is " + std::to_string(budget.max_nodes) +
                             " nodes, graph has " + std::to_string(g.size()));
    }
}

// BFS from `from` over nodes not in `avoid`.
std::vector<bool> reach_without(const Cfg &g, NodeIndex from, const std::vector<bool> &avoid) {
    std::vector<bool> seen(g.size(), false);
    if (avoid[from]) {
        return seen;
    }
    seen[from] = true;
    std::vector<NodeIndex> queue{from};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (auto s : g.successors(queue[head])) {
            if (!avoid[s] && !seen[s]) {
                seen[s] = true;
                queue.push_back(s);
            }
        }
    }
    return seen;
}

// DFS back-edge search restricted to `inside`.
bool has_cycle(const Cfg &g, const std::vector<bool> &inside) {
    enum : std::uint8_t { white, gray, black };
    std::vector<std::uint8_t> mark(g.size(), white);
    for (NodeIndex root = 0; root < g.size(); ++root) {
        if (!inside[root] || mark[root] != white) {
            continue;
        }
        std::vector<std::pair<NodeIndex, std::size_t>> stack{{root, 0}};
        mark[root] = gray;
        while (!stack.empty()) {
            auto &[v, i] = stack.back();
            auto succ = g.successors(v);
            if (i == succ.size()) {
                mark[v] = black;
                stack.pop_back();
                continue;
            }
            auto w = succ[i++];
            if (!inside[w]) {
                continue;
            }
            if (mark[w] == gray) {
                return true;
            }
            if (mark[w] == white) {
                mark[w] = gray;
                stack.emplace_back(w, 0);
            }
        }
    }
    return false;
}

bool all_paths_contain(const Cfg &g, NodeIndex from, NodeIndex n, Budget budget) {
    return !exists_maximal_avoiding(g, from, n, budget);
}

} // namespace

bool exists_maximal_avoiding_set(const Cfg &g, NodeIndex m, const std::vector<bool> &avoid,
                                 Budget budget) {
    check_budget(g, budget);
    if (avoid[m]) {
        return false;
    }
    auto reached = reach_without(g, m, avoid);
    for (NodeIndex v = 0; v < g.size(); ++v) {
        if (reached[v] && g.successors(v).empty()) {
            return true;
        }
    }
    return has_cycle(g, reached);
}

bool exists_maximal_avoiding(const Cfg &g, NodeIndex m, NodeIndex n, Budget budget) {
    std::vector<bool> avoid(g.size(), false);
    avoid[n] = true;
    return exists_maximal_avoiding_set(g, m, avoid, budget);
}

bool first_before(const Cfg &g, NodeIndex s, NodeIndex a, NodeIndex b, Budget budget) {
    if (a == b) {
        throw std::invalid_argument("first_before: nodes must differ");
    }
    if (!all_paths_contain(g, s, a, budget)) {
        return false;
    }
    if (s == a) {
        return true;
    }
    if (s == b) {
        return false;
    }
    std::vector<bool> avoid(g.size(), false);
    avoid[a] = true;
    return !reach_without(g, s, avoid)[b];
}

NtscdRelation ntscd(const Cfg &g, Budget budget) {
    check_budget(g, budget);
    std::vector<NtscdPair> out;
    for (NodeIndex p = 0; p < g.size(); ++p) {
        if (!g.is_predicate(p)) {
            continue;
        }
        auto s1 = g.successors(p)[0];
        auto s2 = g.successors(p)[1];
        for (NodeIndex n = 0; n < g.size(); ++n) {
            bool on_all_1 = all_paths_contain(g, s1, n, budget);
            bool on_all_2 = all_paths_contain(g, s2, n, budget);
            if (on_all_1 != on_all_2) {
                out.push_back({p, n});
            }
        }
    }
    return NtscdRelation(std::move(out));
}

DodRelation dod(const Cfg &g, Budget budget) {
    check_budget(g, budget);
    std::vector<DodTriple> out;
    for (NodeIndex p = 0; p < g.size(); ++p) {
        if (!g.is_predicate(p)) {
            continue;
        }
        auto s1 = g.successors(p)[0];
        auto s2 = g.successors(p)[1];
        for (NodeIndex a = 0; a < g.size(); ++a) {
            if (a == p || !all_paths_contain(g, p, a, budget)) {
                continue;
            }
            for (NodeIndex b = a + 1; b < g.size(); ++b) {
                if (b == p || !all_paths_contain(g, p, b, budget)) {
                    continue;
                }
                bool forward = first_before(g, s1, a, b, budget) && first_before(g, s2, b, a, budget);
                bool backward = first_before(g, s1, b, a, budget) && first_before(g, s2, a, b, budget);
                if (forward || backward) {
                    out.push_back(DodTriple::make(p, a, b));
                }
            }
        }
    }
    return DodRelation(std::move(out));
}

bool is_strongly_control_closed(const Cfg &g, const std::vector<bool> &vset, Budget budget) {
    check_budget(g, budget);
    // Outside nodes reachable from the set by a path with at least one edge.
    std::vector<bool> candidate(g.size(), false);
    for (NodeIndex u = 0; u < g.size(); ++u) {
        if (!vset[u]) {
            continue;
        }
        std::vector<bool> none(g.size(), false);
        auto seen = reach_without(g, u, none);
        for (NodeIndex v = 0; v < g.size(); ++v) {
            candidate[v] = candidate[v] || (seen[v] && !vset[v]);
        }
    }

    for (NodeIndex v = 0; v < g.size(); ++v) {
        if (!candidate[v]) {
            continue;
        }
        // First-reachable elements: walk outside the set, record entries.
        std::vector<bool> outside_seen(g.size(), false);
        std::vector<bool> first_hit(g.size(), false);
        outside_seen[v] = true;
        std::vector<NodeIndex> queue{v};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (auto s : g.successors(queue[head])) {
                if (vset[s]) {
                    first_hit[s] = true;
                } else if (!outside_seen[s]) {
                    outside_seen[s] = true;
                    queue.push_back(s);
                }
            }
        }
        auto hits = std::count(first_hit.begin(), first_hit.end(), true);
        if (hits == 0) {
            continue;
        }
        if (exists_maximal_avoiding_set(g, v, vset, budget) || hits > 1) {
            return false;
        }
    }
    return true;
}

MinClosure min_closure(const Cfg &g, const NodeSet &w) {
    const auto n = g.size();
    if (n > closure_max_nodes) {
        throw BudgetExceeded("closure enumeration budget is " + std::to_string(closure_max_nodes) +
                             " nodes, graph has " + std::to_string(n));
    }
    std::vector<NodeIndex> free_nodes;
    for (NodeIndex v = 0; v < n; ++v) {
        if (!w.contains(v)) {
            free_nodes.push_back(v);
        }
    }

    std::vector<NodeSet> closed;
    for (std::uint32_t mask = 0; mask < (1u << free_nodes.size()); ++mask) {
        std::vector<bool> member(n, false);
        NodeSet set = w;
        w.for_each([&](NodeIndex v) { member[v] = true; });
        for (std::size_t i = 0; i < free_nodes.size(); ++i) {
            if (mask & (1u << i)) {
                member[free_nodes[i]] = true;
                set.insert(free_nodes[i]);
            }
        }
        if (is_strongly_control_closed(g, member)) {
            closed.push_back(std::move(set));
        }
    }

    MinClosure result;
    for (const auto &c : closed) {
        bool has_smaller = std::any_of(closed.begin(), closed.end(), [&](const NodeSet &other) {
            return other.count() < c.count() && other.is_subset_of(c);
        });
        if (!has_smaller) {
            result.minimal.push_back(c);
        }
    }
    // The full node set is always closed, so there is at least one.
    result.nodes = *std::min_element(result.minimal.begin(), result.minimal.end(),
                                     [](const NodeSet &a, const NodeSet &b) { return a.count() < b.count(); });
    return result;
}

} // namespace ctrldep::oracle
