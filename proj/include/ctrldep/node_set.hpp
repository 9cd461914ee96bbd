#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ctrldep {

/// Dense node index. Indices of a graph with n nodes form 0..n-1.
using NodeIndex = std::uint32_t;

/// Fixed-capacity set of node indices, one bit per node of the owning graph.
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(std::size_t capacity) : bits_(capacity) {}

    std::size_t capacity() const { return bits_.size(); }
    std::size_t count() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }

    bool contains(NodeIndex n) const { return n < bits_.size() && bits_.test(n); }
    void insert(NodeIndex n) { bits_.set(n); }
    void erase(NodeIndex n) { bits_.reset(n); }
    void clear() { bits_.reset(); }

    bool is_subset_of(const NodeSet &other) const { return bits_.is_subset_of(other.bits_); }
    bool intersects(const NodeSet &other) const { return bits_.intersects(other.bits_); }

    NodeSet &operator|=(const NodeSet &other) {
        bits_ |= other.bits_;
        return *this;
    }
    NodeSet &operator&=(const NodeSet &other) {
        bits_ &= other.bits_;
        return *this;
    }
    NodeSet &operator-=(const NodeSet &other) {
        bits_ -= other.bits_;
        return *this;
    }
    friend NodeSet operator|(NodeSet a, const NodeSet &b) { return a |= b; }
    friend NodeSet operator&(NodeSet a, const NodeSet &b) { return a &= b; }
    friend NodeSet operator-(NodeSet a, const NodeSet &b) { return a -= b; }
    friend bool operator==(const NodeSet &a, const NodeSet &b) { return a.bits_ == b.bits_; }

    template <typename F>
    void for_each(F &&f) const {
        for (auto i = bits_.find_first(); i != boost::dynamic_bitset<std::uint64_t>::npos;
             i = bits_.find_next(i)) {
            f(static_cast<NodeIndex>(i));
        }
    }

    /// Members in ascending index order.
    std::vector<NodeIndex> to_vector() const {
        std::vector<NodeIndex> out;
        out.reserve(count());
        for_each([&](NodeIndex n) { out.push_back(n); });
        return out;
    }

    static NodeSet of(std::size_t capacity, const std::vector<NodeIndex> &members) {
        NodeSet s(capacity);
        for (auto n : members) {
            s.insert(n);
        }
        return s;
    }

private:
    boost::dynamic_bitset<std::uint64_t> bits_;
};

} // namespace ctrldep
