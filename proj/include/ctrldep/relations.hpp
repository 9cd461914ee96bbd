#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <string>
#include <vector>

#include "ctrldep/cfg.hpp"

namespace ctrldep {

/// p ->ntscd n
struct NtscdPair {
    NodeIndex predicate;
    NodeIndex node;

    friend auto operator<=>(const NtscdPair &, const NtscdPair &) = default;
};

/// p ->dod {a, b}. The pair is unordered; `make` stores it with first < second
/// by node index.
struct DodTriple {
    NodeIndex predicate;
    NodeIndex first;
    NodeIndex second;

    static DodTriple make(NodeIndex p, NodeIndex a, NodeIndex b) {
        return a < b ? DodTriple{p, a, b} : DodTriple{p, b, a};
    }

    friend auto operator<=>(const DodTriple &, const DodTriple &) = default;
};

/// Sorted, duplicate-free set of tuples.
template <typename Tuple>
class Relation {
public:
    using value_type = Tuple;
    using const_iterator = typename std::vector<Tuple>::const_iterator;

    Relation() = default;
    explicit Relation(std::vector<Tuple> items) : items_(std::move(items)) {
        std::sort(items_.begin(), items_.end());
        items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    }

    bool contains(const Tuple &t) const { return std::binary_search(items_.begin(), items_.end(), t); }
    bool includes(const Relation &other) const {
        return std::includes(items_.begin(), items_.end(), other.items_.begin(), other.items_.end());
    }
    /// Tuples of *this missing from `other`.
    Relation minus(const Relation &other) const {
        std::vector<Tuple> out;
        std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                            std::back_inserter(out));
        return Relation(std::move(out));
    }

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const_iterator begin() const { return items_.begin(); }
    const_iterator end() const { return items_.end(); }
    const std::vector<Tuple> &items() const { return items_; }

    friend bool operator==(const Relation &, const Relation &) = default;

private:
    std::vector<Tuple> items_;
};

using NtscdRelation = Relation<NtscdPair>;
using DodRelation = Relation<DodTriple>;

/// Label form of a relation, sorted lexicographically; DOD pairs are
/// normalized so that the smaller label comes first.
std::vector<std::array<std::string, 2>> labelled(const Cfg &g, const NtscdRelation &r);
std::vector<std::array<std::string, 3>> labelled(const Cfg &g, const DodRelation &r);
std::vector<std::string> labelled(const Cfg &g, const NodeSet &s);

/// "(1,2)" / "(p,a,b)"
std::string format_tuple(const std::array<std::string, 2> &t);
std::string format_tuple(const std::array<std::string, 3> &t);

} // namespace ctrldep
