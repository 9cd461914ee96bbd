#include "ctrldep/generators.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctrldep {

std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("uniform_below: empty range");
    }
    // Reject the top partial bucket so every residue is equally likely.
    const auto limit = std::numeric_limits<std::uint64_t>::max() -
                       std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = 0;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

std::size_t max_random_edges(std::size_t nodes) {
    if (nodes <= 1) {
        return nodes;
    }
    return 2 * nodes;
}

namespace {

CfgBuilder numbered_nodes(std::size_t nodes) {
    CfgBuilder b;
    for (std::size_t i = 0; i < nodes; ++i) {
        b.add_node(std::to_string(i));
    }
    return b;
}

// Adds `edges` random edges, avoiding a second edge to the same target.
void scatter_edges(CfgBuilder &b, std::size_t edges, std::mt19937_64 &rng,
                   const std::vector<std::vector<NodeIndex>> &taken_in) {
    const auto n = b.size();
    std::vector<std::vector<NodeIndex>> taken = taken_in;
    std::vector<NodeIndex> open;
    for (NodeIndex v = 0; v < n; ++v) {
        if (b.out_degree(v) < Cfg::max_out_degree && taken[v].size() < n) {
            open.push_back(v);
        }
    }
    for (std::size_t e = 0; e < edges; ++e) {
        if (open.empty()) {
            throw std::invalid_argument("edge count exceeds free out-slots");
        }
        auto slot = uniform_below(rng, open.size());
        auto src = open[slot];
        NodeIndex dst = 0;
        do {
            dst = static_cast<NodeIndex>(uniform_below(rng, n));
        } while (std::find(taken[src].begin(), taken[src].end(), dst) != taken[src].end());
        b.add_edge(src, dst);
        taken[src].push_back(dst);
        if (b.out_degree(src) == Cfg::max_out_degree || taken[src].size() == n) {
            open[slot] = open.back();
            open.pop_back();
        }
    }
}

struct Block {
    NodeIndex entry;
    NodeIndex exit;
};

class StructuredBuilder {
public:
    explicit StructuredBuilder(std::uint64_t seed) : rng_(seed) {}

    Block block(std::size_t depth) {
        if (depth == 0) {
            return leaf();
        }
        switch (uniform_below(rng_, 5)) {
        case 0:
            return leaf();
        case 1: {
            auto first = block(depth - 1);
            auto second = block(depth - 1);
            b_.add_edge(first.exit, second.entry);
            return {first.entry, second.exit};
        }
        case 2: {
            auto cond = fresh();
            auto body = block(depth - 1);
            auto join = fresh();
            b_.add_edge(cond, body.entry);
            b_.add_edge(cond, join);
            b_.add_edge(body.exit, join);
            return {cond, join};
        }
        case 3: {
            auto cond = fresh();
            auto then_branch = block(depth - 1);
            auto else_branch = block(depth - 1);
            auto join = fresh();
            b_.add_edge(cond, then_branch.entry);
            b_.add_edge(cond, else_branch.entry);
            b_.add_edge(then_branch.exit, join);
            b_.add_edge(else_branch.exit, join);
            return {cond, join};
        }
        default: {
            auto header = fresh();
            auto body = block(depth - 1);
            auto after = fresh();
            b_.add_edge(header, body.entry);
            b_.add_edge(body.exit, header);
            b_.add_edge(header, after);
            return {header, after};
        }
        }
    }

    Cfg finish() && { return std::move(b_).build(); }

private:
    NodeIndex fresh() { return b_.add_node(std::to_string(b_.size())); }
    Block leaf() {
        auto n = fresh();
        return {n, n};
    }

    std::mt19937_64 rng_;
    CfgBuilder b_;
};

} // namespace

Cfg random_cfg(std::size_t nodes, std::size_t edges, std::uint64_t seed) {
    if (edges > max_random_edges(nodes)) {
        throw std::invalid_argument("infeasible edge count: " + std::to_string(edges) +
                                    " edges on " + std::to_string(nodes) + " nodes");
    }
    std::mt19937_64 rng(seed);
    auto b = numbered_nodes(nodes);
    scatter_edges(b, edges, rng, std::vector<std::vector<NodeIndex>>(nodes));
    return std::move(b).build();
}

Cfg random_rooted_cfg(std::size_t nodes, std::size_t edges, std::uint64_t seed) {
    if (nodes == 0) {
        throw std::invalid_argument("rooted graph needs at least one node");
    }
    if (edges + 1 < nodes || edges > max_random_edges(nodes)) {
        throw std::invalid_argument("infeasible edge count: " + std::to_string(edges) +
                                    " edges on " + std::to_string(nodes) + " rooted nodes");
    }
    std::mt19937_64 rng(seed);
    auto b = numbered_nodes(nodes);
    std::vector<std::vector<NodeIndex>> taken(nodes);
    // Nodes 0..i-1 own 2i out-slots and use i-1 of them, so a parent exists.
    for (NodeIndex child = 1; child < nodes; ++child) {
        NodeIndex parent = 0;
        do {
            parent = static_cast<NodeIndex>(uniform_below(rng, child));
        } while (b.out_degree(parent) == Cfg::max_out_degree);
        b.add_edge(parent, child);
        taken[parent].push_back(child);
    }
    scatter_edges(b, edges - (nodes - 1), rng, taken);
    return std::move(b).build();
}

Cfg random_reducible_cfg(std::size_t depth, std::uint64_t seed) {
    StructuredBuilder sb(seed);
    sb.block(depth);
    return std::move(sb).finish();
}

Cfg worst_case_dod_cfg(std::size_t total_nodes) {
    if (total_nodes < 8 || total_nodes % 4 != 0) {
        throw std::invalid_argument("worst-case DOD graph needs a size >= 8 divisible by 4, got " +
                                    std::to_string(total_nodes));
    }
    const auto k = total_nodes / 2;
    CfgBuilder b;
    for (std::size_t i = 0; i < k; ++i) {
        b.add_node("c" + std::to_string(i));
    }
    for (std::size_t i = 0; i < k; ++i) {
        b.add_node("p" + std::to_string(i));
    }
    for (std::size_t i = 0; i < k; ++i) {
        b.add_edge(static_cast<NodeIndex>(i), static_cast<NodeIndex>((i + 1) % k));
    }
    for (std::size_t i = 0; i < k; ++i) {
        auto p = static_cast<NodeIndex>(k + i);
        b.add_edge(p, 0);
        b.add_edge(p, static_cast<NodeIndex>(k / 2));
    }
    return std::move(b).build();
}

Cfg random_cycle_fed_cfg(std::size_t max_nodes, std::uint64_t seed) {
    if (max_nodes < 3) {
        throw std::invalid_argument("cycle-fed graphs need at least 3 nodes");
    }
    std::mt19937_64 rng(seed);
    const std::size_t n = 3 + uniform_below(rng, max_nodes - 2);
    const std::size_t cycle = 2 + uniform_below(rng, n - 2);
    const std::size_t front = n - cycle;

    CfgBuilder b;
    for (std::size_t i = 0; i < n; ++i) {
        b.add_node(std::to_string(i));
    }
    // front nodes 0..front-1, cycle nodes front..n-1
    for (std::size_t i = 0; i < front; ++i) {
        auto targets = n - i - 1;
        auto first = i + 1 + uniform_below(rng, targets);
        b.add_edge(static_cast<NodeIndex>(i), static_cast<NodeIndex>(first));
        if (targets > 1 && uniform_below(rng, 5) != 0) {
            auto second = first;
            while (second == first) {
                second = i + 1 + uniform_below(rng, targets);
            }
            b.add_edge(static_cast<NodeIndex>(i), static_cast<NodeIndex>(second));
        }
    }
    for (std::size_t j = 0; j < cycle; ++j) {
        auto v = front + j;
        auto next = front + (j + 1) % cycle;
        b.add_edge(static_cast<NodeIndex>(v), static_cast<NodeIndex>(next));
        if (cycle > 2 && uniform_below(rng, 6) == 0) {
            auto chord = front + uniform_below(rng, cycle);
            if (chord != next) {
                b.add_edge(static_cast<NodeIndex>(v), static_cast<NodeIndex>(chord));
            }
        }
    }
    return std::move(b).build();
}


} // namespace ctrldep
