#include "ctrldep/dod.hpp"

#include <algorithm>

#include "ctrldep/ntscd.hpp"

namespace ctrldep {

std::vector<std::pair<NodeIndex, NodeIndex>> ProjectionGraph::edges() const {
    std::vector<std::pair<NodeIndex, NodeIndex>> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        for (auto s : succ_[i]) {
            out.emplace_back(nodes_[i], s);
        }
    }
    return out;
}

namespace {

// Depth-first search from the successors of `from` through nodes outside
// `stop`; calls hit(m) for every `stop` member found and does not continue
// past it.
template <typename Hit>
void search_to_members(const Cfg &g, std::span<const NodeIndex> from, const NodeSet &stop,
                       std::vector<std::uint32_t> &stamp, std::uint32_t epoch, Hit &&hit) {
    std::vector<NodeIndex> stack;
    for (auto s : from) {
        if (stop.contains(s)) {
            hit(s);
        } else if (stamp[s] != epoch) {
            stamp[s] = epoch;
            stack.push_back(s);
        }
    }
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (auto y : g.successors(x)) {
            if (stop.contains(y)) {
                hit(y);
            } else if (stamp[y] != epoch) {
                stamp[y] = epoch;
                stack.push_back(y);
            }
        }
    }
}

void sort_unique(std::vector<NodeIndex> &v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Structure of A_p when p has two or more successors: p has no
// incoming edge and everything else is one cycle.
void check_structure(const ProjectionGraph &ap, const SuccessorClasses &classes) {
    const auto p = ap.predicate();
    for (auto n : ap.nodes()) {
        auto succ = ap.successors(n);
        if (std::find(succ.begin(), succ.end(), p) != succ.end()) {
            throw InvariantViolation("projection graph has an edge into its predicate");
        }
        if (n != p && succ.size() != 1) {
            throw InvariantViolation("projection graph node outside a simple cycle");
        }
    }
    std::vector<NodeIndex> successors_of_p(ap.successors(p).begin(), ap.successors(p).end());
    std::vector<NodeIndex> firsts = classes.first;
    firsts.insert(firsts.end(), classes.second.begin(), classes.second.end());
    sort_unique(firsts);
    if (firsts != successors_of_p) {
        throw InvariantViolation("V1 and V2 do not cover the successors of p in A_p");
    }
}

} // namespace

ProjectionGraph build_ap(const Cfg &g, NodeIndex p, const NodeSet &vp_of_p) {
    ProjectionGraph ap;
    ap.predicate_ = p;
    ap.nodes_ = vp_of_p.to_vector();
    ap.slot_.assign(g.size(), ProjectionGraph::npos);
    ap.succ_.resize(ap.nodes_.size());
    for (std::size_t i = 0; i < ap.nodes_.size(); ++i) {
        ap.slot_[ap.nodes_[i]] = static_cast<std::uint32_t>(i);
    }

    std::vector<std::uint32_t> stamp(g.size(), 0);
    std::uint32_t epoch = 0;
    for (std::size_t i = 0; i < ap.nodes_.size(); ++i) {
        auto &succ = ap.succ_[i];
        search_to_members(g, g.successors(ap.nodes_[i]), vp_of_p, stamp, ++epoch,
                          [&](NodeIndex m) { succ.push_back(m); });
        sort_unique(succ);
    }
    return ap;
}

NodeClass SuccessorClasses::classify(NodeIndex n) const {
    bool in_first = std::binary_search(first.begin(), first.end(), n);
    bool in_second = std::binary_search(second.begin(), second.end(), n);
    if (in_first && in_second) {
        return NodeClass::both;
    }
    if (in_first) {
        return NodeClass::first;
    }
    return in_second ? NodeClass::second : NodeClass::neither;
}

bool SuccessorClasses::disjoint() const {
    std::vector<NodeIndex> common;
    std::set_intersection(first.begin(), first.end(), second.begin(), second.end(),
                          std::back_inserter(common));
    return common.empty();
}

SuccessorClasses compute_v1_v2(const Cfg &g, NodeIndex p, const NodeSet &vp_of_p) {
    auto succ = g.successors(p);
    if (succ.size() != 2) {
        throw std::invalid_argument("compute_v1_v2 needs a node with two successors");
    }
    SuccessorClasses classes;
    std::vector<std::uint32_t> stamp(g.size(), 0);
    search_to_members(g, succ.subspan(0, 1), vp_of_p, stamp, 1,
                      [&](NodeIndex m) { classes.first.push_back(m); });
    search_to_members(g, succ.subspan(1, 1), vp_of_p, stamp, 2,
                      [&](NodeIndex m) { classes.second.push_back(m); });
    sort_unique(classes.first);
    sort_unique(classes.second);

    vp_of_p.for_each([&](NodeIndex n) {
        if (n != p && classes.classify(n) == NodeClass::neither) {
            classes.neither.push_back(n);
        }
    });
    return classes;
}

std::vector<NodeIndex> unfold_cycle_from(const ProjectionGraph &ap, NodeIndex start) {
    const auto p = ap.predicate();
    if (start == p || !ap.contains(start)) {
        throw std::invalid_argument("unfolding must start on the cycle");
    }
    const auto cycle_len = ap.nodes().size() - 1;
    std::vector<NodeIndex> seq;
    seq.reserve(cycle_len);
    auto cur = start;
    do {
        if (seq.size() == cycle_len) {
            throw InvariantViolation("projection graph cycle does not return to its start");
        }
        seq.push_back(cur);
        auto succ = ap.successors(cur);
        if (succ.size() != 1 || succ[0] == p) {
            throw InvariantViolation("projection graph is not a cycle plus its predicate");
        }
        cur = succ[0];
    } while (cur != start);
    if (seq.size() != cycle_len) {
        throw InvariantViolation("projection graph cycle misses nodes of V_p");
    }
    return seq;
}

std::vector<NodeIndex> unfold_cycle(const Cfg &g, const ProjectionGraph &ap,
                                    std::span<const NodeIndex> start_set) {
    if (start_set.empty()) {
        throw std::invalid_argument("unfolding needs a start node");
    }
    auto start = *std::min_element(start_set.begin(), start_set.end(),
                                   [&](NodeIndex a, NodeIndex b) { return g.label(a) < g.label(b); });
    return unfold_cycle_from(ap, start);
}

bool match_unfolding_pattern(std::span<const NodeIndex> seq, const SuccessorClasses &classes) {
    if (seq.empty() || classes.classify(seq.front()) != NodeClass::first) {
        return false;
    }
    enum { leading_first, second_block, trailing_first } state = leading_first;
    for (auto n : seq) {
        switch (classes.classify(n)) {
        case NodeClass::first:
            if (state == second_block) {
                state = trailing_first;
            }
            break;
        case NodeClass::second:
            if (state == leading_first) {
                state = second_block;
            } else if (state == trailing_first) {
                return false;
            }
            break;
        case NodeClass::both:
            throw std::invalid_argument("pattern check requires disjoint V1 and V2");
        case NodeClass::neither:
            break;
        }
    }
    return state != leading_first;
}

StripSegments extract_segments(std::span<const NodeIndex> seq, const SuccessorClasses &classes) {
    const auto len = seq.size();
    auto is = [&](std::size_t i, NodeClass c) { return classes.classify(seq[i % len]) == c; };

    std::size_t first_second = 0;
    while (first_second < len && !is(first_second, NodeClass::second)) {
        ++first_second;
    }
    std::size_t last_second = len;
    while (last_second > 0 && !is(last_second - 1, NodeClass::second)) {
        --last_second;
    }
    if (first_second == len || last_second == 0) {
        throw std::invalid_argument("unfolding has no V2 node");
    }
    --last_second;

    std::size_t m_start = first_second;
    while (m_start > 0 && !is(m_start - 1, NodeClass::first)) {
        --m_start;
    }
    if (m_start == 0 && !is(0, NodeClass::first)) {
        throw std::invalid_argument("unfolding does not start with a V1 node");
    }
    if (m_start > 0) {
        --m_start;
    }

    StripSegments seg;
    seg.m_segment.assign(seq.begin() + static_cast<std::ptrdiff_t>(m_start),
                         seq.begin() + static_cast<std::ptrdiff_t>(first_second));
    for (auto i = last_second; !is(i, NodeClass::first); ++i) {
        seg.o_segment.push_back(seq[i % len]);
    }
    return seg;
}

std::vector<DodTriple> dod_for_predicate(const Cfg &g, NodeIndex p, const VpMap &vp) {
    const auto &vp_of_p = vp[p];
    // A triple needs two distinct members besides p.
    if (vp_of_p.count() < 3) {
        return {};
    }
    auto ap = build_ap(g, p, vp_of_p);
    if (ap.successors(p).size() <= 1) {
        return {};
    }

    auto classes = compute_v1_v2(g, p, vp_of_p);
    check_structure(ap, classes);
    if (!classes.disjoint()) {
        return {};
    }

    auto seq = unfold_cycle(g, ap, classes.first);
    if (!match_unfolding_pattern(seq, classes)) {
        return {};
    }

    auto seg = extract_segments(seq, classes);
    std::vector<DodTriple> out;
    out.reserve(seg.m_segment.size() * seg.o_segment.size());
    for (auto a : seg.m_segment) {
        for (auto b : seg.o_segment) {
            out.push_back(DodTriple::make(p, a, b));
        }
    }
    return out;
}

DodAndNtscd dod_and_ntscd(const Cfg &g) {
    auto vp = vp_sets(g);
    std::vector<DodTriple> triples;
    for (auto p : predicates(g)) {
        auto part = dod_for_predicate(g, p, vp);
        triples.insert(triples.end(), part.begin(), part.end());
    }
    return {DodRelation(std::move(triples)), ntscd_from_vp(g, vp)};
}

DodRelation dod_new(const Cfg &g) {
    auto vp = vp_sets(g);
    std::vector<DodTriple> triples;
    for (auto p : predicates(g)) {
        auto part = dod_for_predicate(g, p, vp);
        triples.insert(triples.end(), part.begin(), part.end());
    }
    return DodRelation(std::move(triples));
}

} // namespace ctrldep
