#include "ctrldep/cfg.hpp"

#include <algorithm>
#include <limits>

namespace ctrldep {

std::optional<NodeIndex> Cfg::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

NodeIndex Cfg::at(std::string_view label) const {
    if (auto n = find(label)) {
        return *n;
    }
    throw CfgError("unknown node '" + std::string(label) + "'");
}

std::vector<std::pair<NodeIndex, NodeIndex>> Cfg::edges() const {
    std::vector<std::pair<NodeIndex, NodeIndex>> out;
    out.reserve(edge_count_);
    for (NodeIndex n = 0; n < size(); ++n) {
        for (auto s : succ_[n]) {
            out.emplace_back(n, s);
        }
    }
    return out;
}

NodeIndex CfgBuilder::add_node(std::string label) {
    if (graph_.index_.contains(label)) {
        throw CfgError("duplicate node label '" + label + "'");
    }
    auto n = static_cast<NodeIndex>(graph_.labels_.size());
    graph_.index_.emplace(label, n);
    graph_.labels_.push_back(std::move(label));
    graph_.succ_.emplace_back();
    graph_.pred_.emplace_back();
    return n;
}

NodeIndex CfgBuilder::node(std::string_view label) {
    if (auto n = graph_.find(label)) {
        return *n;
    }
    return add_node(std::string(label));
}

void CfgBuilder::add_edge(NodeIndex src, NodeIndex dst) {
    if (src >= graph_.size() || dst >= graph_.size()) {
        throw CfgError("edge endpoint out of range");
    }
    auto &out = graph_.succ_[src];
    if (out.size() >= Cfg::max_out_degree) {
        throw CfgError("out-degree exceeds 2 at node '" + graph_.labels_[src] + "'");
    }
    out.push_back(dst);
    graph_.pred_[dst].push_back(src);
    ++graph_.edge_count_;
}

void CfgBuilder::add_edge(std::string_view src, std::string_view dst) {
    auto s = graph_.find(src);
    if (!s) {
        throw CfgError("edge source '" + std::string(src) + "' is not a declared node");
    }
    auto d = graph_.find(dst);
    if (!d) {
        throw CfgError("edge target '" + std::string(dst) + "' is not a declared node");
    }
    add_edge(*s, *d);
}

Cfg CfgBuilder::build() && { return std::move(graph_); }

std::vector<NodeIndex> predicates(const Cfg &g) {
    std::vector<NodeIndex> out;
    for (NodeIndex n = 0; n < g.size(); ++n) {
        if (g.is_predicate(n)) {
            out.push_back(n);
        }
    }
    return out;
}

NodeSet reachable_set(const Cfg &g, NodeIndex n) {
    NodeSet seen(g.size());
    std::vector<NodeIndex> stack{n};
    seen.insert(n);
    while (!stack.empty()) {
        auto cur = stack.back();
        stack.pop_back();
        for (auto s : g.successors(cur)) {
            if (!seen.contains(s)) {
                seen.insert(s);
                stack.push_back(s);
            }
        }
    }
    return seen;
}

SccPartition sccs(const Cfg &g) {
    constexpr auto unvisited = std::numeric_limits<std::size_t>::max();
    const auto n = g.size();

    SccPartition result;
    result.component.assign(n, unvisited);

    std::vector<std::size_t> order(n, unvisited);
    std::vector<std::size_t> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<NodeIndex> stack;
    // (node, next out-edge slot)
    std::vector<std::pair<NodeIndex, std::size_t>> call;
    std::size_t next_order = 0;

    for (NodeIndex root = 0; root < n; ++root) {
        if (order[root] != unvisited) {
            continue;
        }
        call.emplace_back(root, 0);
        order[root] = low[root] = next_order++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call.empty()) {
            auto &[v, slot] = call.back();
            auto succ = g.successors(v);
            if (slot < succ.size()) {
                auto w = succ[slot++];
                if (order[w] == unvisited) {
                    order[w] = low[w] = next_order++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], order[w]);
                }
                continue;
            }

            auto done = v;
            call.pop_back();
            if (!call.empty()) {
                auto parent = call.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] != order[done]) {
                continue;
            }

            auto id = result.members.size();
            auto &members = result.members.emplace_back();
            NodeIndex w = 0;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                result.component[w] = id;
                members.push_back(w);
            } while (w != done);
            std::sort(members.begin(), members.end());
        }
    }

    const auto count = result.members.size();
    result.nontrivial.assign(count, false);
    result.terminal.assign(count, true);
    for (NodeIndex v = 0; v < n; ++v) {
        for (auto w : g.successors(v)) {
            auto cv = result.component[v];
            if (cv == result.component[w]) {
                result.nontrivial[cv] = true;
            } else {
                result.terminal[cv] = false;
            }
        }
    }
    return result;
}

} // namespace ctrldep
