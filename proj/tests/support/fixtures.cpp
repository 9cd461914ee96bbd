#include "fixtures.hpp"

#include <algorithm>

namespace fixtures {

Cfg graph(std::initializer_list<std::pair<const char *, const char *>> edges,
          std::initializer_list<const char *> nodes) {
    ctrldep::CfgBuilder b;
    for (const auto *n : nodes) {
        b.add_node(n);
    }
    for (auto [s, t] : edges) {
        auto src = b.node(s);
        b.add_edge(src, b.node(t));
    }
    return std::move(b).build();
}

Cfg loop_graph() {
    return graph({{"a", "b"}, {"a", "c"}, {"c", "d"}, {"d", "e"}, {"b", "c"}, {"d", "d"}, {"b", "e"}},
                 {"a", "b", "c", "d", "e"});
}

Cfg worklist_trap() {
    return graph({{"1", "2"}, {"1", "6"}, {"2", "3"}, {"2", "4"}, {"3", "5"}, {"4", "5"}, {"5", "6"}});
}

Cfg irreducible_pair() { return graph({{"a", "b"}, {"a", "c"}, {"b", "c"}, {"c", "b"}}); }

Cfg irreducible_pair_with_start() { return graph({{"s", "a"}, {"a", "b"}, {"a", "c"}, {"b", "c"}, {"c", "b"}}); }

Cfg formula_trap() { return graph({{"p", "a"}, {"p", "b"}, {"b", "c"}, {"a", "b"}, {"b", "a"}}, {"p", "a", "b", "c"}); }

Cfg strip_example() {
    return graph({{"p", "s1"},
                  {"p", "s2"},
                  {"s1", "n1"},
                  {"s1", "n7"},
                  {"s2", "n2"},
                  {"s2", "n5"},
                  {"n1", "n2"},
                  {"n2", "n3"},
                  {"n3", "n4"},
                  {"n4", "n5"},
                  {"n5", "n6"},
                  {"n6", "n7"},
                  {"n7", "n8"},
                  {"n8", "n1"}});
}

Cfg chain3() { return graph({{"x", "y"}, {"y", "z"}}); }

NodeIndex at(const Cfg &g, const char *label) { return g.at(label); }

NodeSet set_of(const Cfg &g, std::initializer_list<const char *> labels) {
    NodeSet s(g.size());
    for (const auto *l : labels) {
        s.insert(g.at(l));
    }
    return s;
}

std::vector<NodeIndex> indices(const Cfg &g, std::initializer_list<const char *> labels) {
    std::vector<NodeIndex> out;
    for (const auto *l : labels) {
        out.push_back(g.at(l));
    }
    return out;
}

Pairs pairs(std::initializer_list<std::array<std::string, 2>> items) {
    Pairs out(items);
    std::sort(out.begin(), out.end());
    return out;
}

Triples triples(std::initializer_list<std::array<std::string, 3>> items) {
    Triples out(items);
    std::sort(out.begin(), out.end());
    return out;
}

Labels labels(std::initializer_list<std::string> items) {
    Labels out(items);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace fixtures
