#include "ctrldep/maximal_paths.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctrldep {

PathColoring::PathColoring(const Cfg &g)
    : g_(&g), out_degree_(g.size()), counter_(g.size()), color_(g.size()) {
    for (NodeIndex n = 0; n < g.size(); ++n) {
        out_degree_[n] = static_cast<std::uint32_t>(g.successors(n).size());
    }
    red_.reserve(g.size());
    stack_.reserve(g.size());
}

std::span<const NodeIndex> PathColoring::run(std::span<const NodeIndex> seeds) {
    if (seeds.empty()) {
        throw std::invalid_argument("coloring needs at least one seed");
    }
    std::copy(out_degree_.begin(), out_degree_.end(), counter_.begin());
    std::fill(color_.begin(), color_.end(), 0);
    red_.clear();
    stack_.clear();
    visits_ = 0;

    for (auto s : seeds) {
        if (color_[s] == 0) {
            color_[s] = 1;
            red_.push_back(s);
            stack_.push_back(s);
        }
    }

    // A red node is never decremented again: seeds keep their counters, and
    // revisiting them would double-count edges into their predecessors.
    while (!stack_.empty()) {
        auto n = stack_.back();
        stack_.pop_back();
        for (auto m : g_->predecessors(n)) {
            if (color_[m] != 0) {
                continue;
            }
            ++visits_;
            if (--counter_[m] == 0) {
                color_[m] = 1;
                red_.push_back(m);
                stack_.push_back(m);
            }
        }
    }
    return red_;
}

NodeSet color_all_paths_contain(const Cfg &g, const NodeSet &targets) {
    auto seeds = targets.to_vector();
    if (seeds.empty()) {
        throw std::invalid_argument("target set must not be empty");
    }
    PathColoring coloring(g);
    NodeSet out(g.size());
    for (auto n : coloring.run(seeds)) {
        out.insert(n);
    }
    return out;
}

VpMap vp_sets(const Cfg &g) {
    std::vector<NodeSet> sets(g.size(), NodeSet(g.size()));
    PathColoring coloring(g);
    for (NodeIndex r = 0; r < g.size(); ++r) {
        for (auto m : coloring.run(r)) {
            sets[m].insert(r);
        }
    }
    return VpMap(std::move(sets));
}

NodeSet reachable_avoiding(const Cfg &g, NodeIndex start, NodeIndex removed) {
    NodeSet seen(g.size());
    seen.insert(start);
    std::vector<NodeIndex> stack{start};
    while (!stack.empty()) {
        auto cur = stack.back();
        stack.pop_back();
        for (auto s : g.successors(cur)) {
            if (s != removed && !seen.contains(s)) {
                seen.insert(s);
                stack.push_back(s);
            }
        }
    }
    return seen;
}

bool first_before_on_all(const Cfg &g, NodeIndex start, NodeIndex first, NodeIndex then) {
    if (first == then) {
        throw std::invalid_argument("first_before_on_all: nodes must differ");
    }
    PathColoring coloring(g);
    coloring.run(first);
    if (!coloring.red(start)) {
        return false;
    }
    if (start == first) {
        return true;
    }
    if (start == then) {
        return false;
    }
    return !reachable_avoiding(g, start, first).contains(then);
}

} // namespace ctrldep
