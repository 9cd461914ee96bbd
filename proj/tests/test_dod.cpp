#include <catch_amalgamated.hpp>

#include "ctrldep/dod.hpp"
#include "ctrldep/generators.hpp"
#include "ctrldep/ntscd.hpp"
#include "ctrldep/oracle.hpp"
#include "fixtures.hpp"

using namespace ctrldep;
using fixtures::set_of;
using fixtures::triples;

namespace {

std::vector<std::string> names(const Cfg &g, std::span<const NodeIndex> v) {
    std::vector<std::string> out;
    for (auto n : v) {
        out.push_back(g.label(n));
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> edge_names(const Cfg &g, const ProjectionGraph &ap) {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto [a, b] : ap.edges()) {
        out.emplace_back(g.label(a), g.label(b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

using Names = std::vector<std::string>;

} // namespace

TEST_CASE("projection graph") {
    SECTION("irreducible_pair") {
        auto g = fixtures::irreducible_pair();
        auto vp = vp_sets(g);
        auto ap = build_ap(g, g.at("a"), vp[g.at("a")]);
        CHECK(edge_names(g, ap) ==
              std::vector<std::pair<std::string, std::string>>{{"a", "b"}, {"a", "c"}, {"b", "c"}, {"c", "b"}});
    }
    SECTION("worklist_trap predicate 1") {
        auto g = fixtures::worklist_trap();
        auto vp = vp_sets(g);
        auto ap = build_ap(g, g.at("1"), vp[g.at("1")]);
        CHECK(edge_names(g, ap) == std::vector<std::pair<std::string, std::string>>{{"1", "6"}});
    }
    SECTION("trivial V_p") {
        auto g = fixtures::graph({{"p", "x"}, {"p", "y"}});
        auto ap = build_ap(g, g.at("p"), set_of(g, {"p"}));
        CHECK(ap.nodes().size() == 1);
        CHECK(ap.edges().empty());
    }
}

TEST_CASE("V1 and V2") {
    SECTION("irreducible_pair") {
        auto g = fixtures::irreducible_pair();
        auto vp = vp_sets(g);
        auto c = compute_v1_v2(g, g.at("a"), vp[g.at("a")]);
        CHECK(names(g, c.first) == Names{"b"});
        CHECK(names(g, c.second) == Names{"c"});
        CHECK(c.disjoint());
    }
    SECTION("strip_example") {
        auto g = fixtures::strip_example();
        auto vp = vp_sets(g);
        auto c = compute_v1_v2(g, g.at("p"), vp[g.at("p")]);
        auto first = names(g, c.first);
        auto second = names(g, c.second);
        std::sort(first.begin(), first.end());
        std::sort(second.begin(), second.end());
        CHECK(first == Names{"n1", "n7"});
        CHECK(second == Names{"n2", "n5"});
        CHECK(c.classify(g.at("n3")) == NodeClass::neither);
        CHECK(c.classify(g.at("n5")) == NodeClass::second);
    }
    SECTION("both successors meet the same node") {
        auto g = fixtures::graph({{"p", "x"}, {"p", "y"}, {"x", "z"}, {"y", "z"}, {"z", "w"}, {"w", "z"}});
        auto vp = vp_sets(g);
        auto c = compute_v1_v2(g, g.at("p"), vp[g.at("p")]);
        CHECK_FALSE(c.disjoint());
        CHECK(c.classify(g.at("z")) == NodeClass::both);
        CHECK(dod_for_predicate(g, g.at("p"), vp).empty());
    }
}

TEST_CASE("cycle unfolding") {
    SECTION("strip_example") {
        auto g = fixtures::strip_example();
        auto vp = vp_sets(g);
        auto p = g.at("p");
        auto ap = build_ap(g, p, vp[p]);
        auto c = compute_v1_v2(g, p, vp[p]);
        auto seq = unfold_cycle(g, ap, c.first);
        CHECK(names(g, seq) == Names{"n1", "n2", "n3", "n4", "n5", "n6", "n7", "n8"});
        CHECK(match_unfolding_pattern(seq, c));
        auto seg = extract_segments(seq, c);
        CHECK(names(g, seg.m_segment) == Names{"n1"});
        CHECK(names(g, seg.o_segment) == Names{"n5", "n6"});

        auto from_n7 = unfold_cycle_from(ap, g.at("n7"));
        CHECK(names(g, from_n7) == Names{"n7", "n8", "n1", "n2", "n3", "n4", "n5", "n6"});
        auto seg7 = extract_segments(from_n7, c);
        CHECK(seg7.m_segment == seg.m_segment);
        CHECK(seg7.o_segment == seg.o_segment);

        CHECK(labelled(g, DodRelation(dod_for_predicate(g, p, vp))) ==
              triples({{"p", "n1", "n5"}, {"p", "n1", "n6"}}));
        CHECK(labelled(g, oracle::dod(g)) == labelled(g, dod_new(g)));
    }
    SECTION("irreducible_pair") {
        auto g = fixtures::irreducible_pair();
        auto vp = vp_sets(g);
        auto a = g.at("a");
        auto ap = build_ap(g, a, vp[a]);
        auto c = compute_v1_v2(g, a, vp[a]);
        auto seq = unfold_cycle(g, ap, c.first);
        CHECK(names(g, seq) == Names{"b", "c"});
        auto seg = extract_segments(seq, c);
        CHECK(names(g, seg.m_segment) == Names{"b"});
        CHECK(names(g, seg.o_segment) == Names{"c"});
    }
    SECTION("two-node rotation") {
        auto g = fixtures::graph({{"p", "x"}, {"p", "y"}, {"x", "y"}, {"y", "x"}});
        auto vp = vp_sets(g);
        auto ap = build_ap(g, g.at("p"), vp[g.at("p")]);
        CHECK(names(g, unfold_cycle_from(ap, g.at("y"))) == Names{"y", "x"});
    }
    SECTION("worst case, 8 nodes") {
        auto g = worst_case_dod_cfg(8);
        auto vp = vp_sets(g);
        for (auto p : predicates(g)) {
            auto ap = build_ap(g, p, vp[p]);
            auto c = compute_v1_v2(g, p, vp[p]);
            auto seg = extract_segments(unfold_cycle(g, ap, c.first), c);
            CHECK(names(g, seg.m_segment) == Names{"c0", "c1"});
            CHECK(names(g, seg.o_segment) == Names{"c2", "c3"});
        }
    }
}

TEST_CASE("unfolding pattern") {
    // classes on a 4-cycle x0..x3
    auto g = fixtures::graph({{"x0", "x1"}, {"x1", "x2"}, {"x2", "x3"}, {"x3", "x0"}});
    std::vector<NodeIndex> seq{0, 1, 2, 3};
    SuccessorClasses alternating{{0, 2}, {1, 3}, {}};
    CHECK_FALSE(match_unfolding_pattern(seq, alternating));
    SuccessorClasses no_second{{0}, {}, {1, 2}};
    CHECK_FALSE(match_unfolding_pattern(std::span(seq).first(3), no_second));
    SuccessorClasses once{{0, 3}, {1}, {2}};
    CHECK(match_unfolding_pattern(seq, once));
    (void)g;
}

TEST_CASE("dod on the fixtures") {
    auto g4 = fixtures::irreducible_pair();
    CHECK(labelled(g4, dod_new(g4)) == triples({{"a", "b", "c"}}));
    CHECK(labelled(g4, oracle::dod(g4)) == triples({{"a", "b", "c"}}));
    CHECK(labelled(g4, dod_formula(g4, FormulaVariant::original)) == triples({{"a", "b", "c"}}));
    CHECK(labelled(g4, dod_formula(g4, FormulaVariant::fixed)) == triples({{"a", "b", "c"}}));

    auto g5 = fixtures::formula_trap();
    CHECK(dod_new(g5).empty());
    CHECK(oracle::dod(g5).empty());
    CHECK(labelled(g5, dod_formula(g5, FormulaVariant::original)) == triples({{"p", "a", "b"}}));
    CHECK(dod_formula(g5, FormulaVariant::fixed).empty());
}

TEST_CASE("label-level output orders each pair by label") {
    // node "z" gets a smaller index than "b"
    auto g = fixtures::graph({{"a", "z"}, {"a", "b"}, {"z", "b"}, {"b", "z"}}, {"a", "z", "b"});
    CHECK(labelled(g, dod_new(g)) == triples({{"a", "b", "z"}}));
}

TEST_CASE("reducible graphs have no DOD") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto g = random_reducible_cfg(1 + seed % 5, seed);
        CHECK(dod_new(g).empty());
        CHECK(dod_formula(g, FormulaVariant::fixed).empty());
    }
}

TEST_CASE("dod variants agree with the oracle on random graphs") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        auto nodes = 1 + seed % 12;
        auto g = random_cfg(nodes, (seed * 7 + 3) % (max_random_edges(nodes) + 1), seed);
        INFO("seed " << seed);
        auto expected = oracle::dod(g);
        REQUIRE(dod_new(g) == expected);
        REQUIRE(dod_formula(g, FormulaVariant::fixed) == expected);
        REQUIRE(dod_formula(g, FormulaVariant::original).includes(expected));
        auto both = dod_and_ntscd(g);
        REQUIRE(both.dod == expected);
        REQUIRE(both.ntscd == oracle::ntscd(g));
    }
}

TEST_CASE("dod variants agree with the oracle on cycle-fed graphs") {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        auto g = random_cycle_fed_cfg(12, seed);
        INFO("seed " << seed);
        auto expected = oracle::dod(g);
        REQUIRE(dod_new(g) == expected);
        REQUIRE(dod_formula(g, FormulaVariant::fixed) == expected);
        REQUIRE(dod_formula(g, FormulaVariant::original).includes(expected));
        REQUIRE(ntscd_ranganath_fixed(g) == oracle::ntscd(g));
    }
}

TEST_CASE("worst case sizes") {
    for (std::size_t n : {8u, 12u, 16u, 32u}) {
        CHECK(dod_new(worst_case_dod_cfg(n)).size() == n * n * n / 32);
    }
}
