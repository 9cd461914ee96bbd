// Forward worklist NTSCD algorithm and its fixpoint variant.

#include <bit>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>

#include "ctrldep/ntscd.hpp"

namespace ctrldep {

SymbolTable::SymbolTable(const Cfg &g)
    : predicates_(ctrldep::predicates(g)),
      column_(g.size(), std::numeric_limits<std::uint32_t>::max()),
      width_(predicates_.size()),
      cells_(g.size() * predicates_.size(), 0) {
    for (std::size_t i = 0; i < predicates_.size(); ++i) {
        column_[predicates_[i]] = static_cast<std::uint32_t>(i);
    }
}

std::vector<NodeIndex> SymbolTable::symbols(const Cfg &g, NodeIndex n, NodeIndex p) const {
    std::vector<NodeIndex> out;
    auto mask = cell(n, p);
    auto succ = g.successors(p);
    for (std::size_t slot = 0; slot < succ.size(); ++slot) {
        if (mask & (1u << slot)) {
            out.push_back(succ[slot]);
        }
    }
    return out;
}

namespace {

class Workbag {
public:
    Workbag(const Cfg &g, const WorklistPolicy &policy)
        : policy_(policy), in_bag_(g.size(), false), rank_(g.size(), unranked) {
        for (std::size_t i = 0; i < policy.order.size(); ++i) {
            auto n = policy.order[i];
            if (n < g.size() && rank_[n] == unranked) {
                rank_[n] = i;
            }
        }
    }

    bool empty() const { return size_ == 0; }

    // Set semantics: pushing a member is a no-op.
    void push(NodeIndex n) {
        if (in_bag_[n]) {
            return;
        }
        in_bag_[n] = true;
        ++size_;
        if (policy_.kind == WorklistPolicy::Kind::explicit_order) {
            if (rank_[n] == unranked) {
                throw std::invalid_argument("explicit worklist order does not list node index " +
                                            std::to_string(n));
            }
            ranked_.emplace(rank_[n], n);
        } else {
            queue_.push_back(n);
        }
    }

    NodeIndex pop() {
        NodeIndex n = 0;
        switch (policy_.kind) {
        case WorklistPolicy::Kind::fifo:
            n = queue_.front();
            queue_.pop_front();
            break;
        case WorklistPolicy::Kind::lifo:
            n = queue_.back();
            queue_.pop_back();
            break;
        case WorklistPolicy::Kind::explicit_order:
            n = ranked_.begin()->second;
            ranked_.erase(ranked_.begin());
            break;
        }
        in_bag_[n] = false;
        --size_;
        return n;
    }

private:
    static constexpr std::size_t unranked = std::numeric_limits<std::size_t>::max();

    const WorklistPolicy &policy_;
    std::vector<bool> in_bag_;
    std::vector<std::size_t> rank_;
    std::deque<NodeIndex> queue_;
    std::set<std::pair<std::size_t, NodeIndex>> ranked_;
    std::size_t size_ = 0;
};

class Propagation {
public:
    explicit Propagation(const Cfg &g) : g_(g), table_(g) {}

    // Initialization: S[r, p] = {t_pr} for each predicate p and successor r.
    template <typename Push>
    void initialize(Push &&push) {
        for (auto p : table_.predicates()) {
            auto succ = g_.successors(p);
            for (std::size_t slot = 0; slot < succ.size(); ++slot) {
                table_.cell(succ[slot], p) = static_cast<std::uint8_t>(1u << slot);
                push(succ[slot]);
            }
        }
    }

    // One execution of the loop body for node n; returns whether S changed.
    template <typename Push>
    bool body(NodeIndex n, Push &&push) {
        bool changed = false;
        auto succ = g_.successors(n);
        const bool single = succ.size() == 1 || (succ.size() == 2 && succ[0] == succ[1]);

        if (single && succ[0] != n) {
            auto s = succ[0];
            for (auto p : table_.predicates()) {
                auto from = table_.cell(n, p);
                auto &to = table_.cell(s, p);
                if ((from & ~to) != 0) {
                    to |= from;
                    push(s);
                    changed = true;
                }
            }
        }

        if (g_.is_predicate(n)) {
            for (NodeIndex m = 0; m < g_.size(); ++m) {
                if (std::popcount(table_.cell(m, n)) != 2) {
                    continue;
                }
                for (auto p : table_.predicates()) {
                    if (p == n) {
                        continue;
                    }
                    auto from = table_.cell(n, p);
                    auto &to = table_.cell(m, p);
                    if ((from & ~to) != 0) {
                        to |= from;
                        push(m);
                        changed = true;
                    }
                }
            }
        }
        return changed;
    }

    // 0 < |S[n, p]| < |Successors(p)|
    NtscdRelation relation() const {
        std::vector<NtscdPair> out;
        for (NodeIndex n = 0; n < g_.size(); ++n) {
            for (auto p : table_.predicates()) {
                auto size = std::popcount(table_.cell(n, p));
                if (size > 0 && size < 2) {
                    out.push_back({p, n});
                }
            }
        }
        return NtscdRelation(std::move(out));
    }

    SymbolTable take_table() && { return std::move(table_); }

private:
    const Cfg &g_;
    SymbolTable table_;
};

} // namespace

RanganathRun run_ranganath(const Cfg &g, const WorklistPolicy &policy) {
    Propagation prop(g);
    Workbag bag(g, policy);
    auto push = [&](NodeIndex n) { bag.push(n); };

    prop.initialize(push);
    std::size_t steps = 0;
    while (!bag.empty()) {
        prop.body(bag.pop(), push);
        ++steps;
    }

    RanganathRun run;
    run.relation = prop.relation();
    run.steps = steps;
    run.table = std::move(prop).take_table();
    return run;
}

NtscdRelation ntscd_ranganath(const Cfg &g, const WorklistPolicy &policy) {
    return run_ranganath(g, policy).relation;
}

RanganathRun run_ranganath_fixed(const Cfg &g, PassOrder order) {
    Propagation prop(g);
    auto ignore = [](NodeIndex) {};

    prop.initialize(ignore);
    std::size_t passes = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        ++passes;
        for (NodeIndex i = 0; i < g.size(); ++i) {
            auto n = order == PassOrder::ascending ? i : static_cast<NodeIndex>(g.size() - 1 - i);
            changed = prop.body(n, ignore) || changed;
        }
    }

    RanganathRun run;
    run.relation = prop.relation();
    run.steps = passes;
    run.table = std::move(prop).take_table();
    return run;
}

NtscdRelation ntscd_ranganath_fixed(const Cfg &g, PassOrder order) {
    return run_ranganath_fixed(g, order).relation;
}

} // namespace ctrldep
