#include <catch_amalgamated.hpp>

#include "ctrldep/dod.hpp"
#include "ctrldep/generators.hpp"
#include "ctrldep/oracle.hpp"
#include "graph_oracles.hpp"

using namespace ctrldep;

TEST_CASE("random_cfg with no edges") {
    auto g = random_cfg(5, 0, 99);
    CHECK(g.size() == 5);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("random_cfg respects counts and degree") {
    auto g = random_cfg(500, 1000, 3);
    CHECK(g.size() == 500);
    CHECK(g.edge_count() == 1000);
    for (NodeIndex n = 0; n < g.size(); ++n) {
        CHECK(g.successors(n).size() <= 2);
    }
    CHECK(random_cfg(500, 1000, 3) == g);
    CHECK_FALSE(random_cfg(500, 1000, 4) == g);
    CHECK_THROWS_AS(random_cfg(3, 7, 1), std::invalid_argument);
}

TEST_CASE("random_cfg never repeats a target") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto g = random_cfg(6, 12, seed);
        for (NodeIndex n = 0; n < g.size(); ++n) {
            CHECK(g.is_predicate(n));
        }
    }
}

TEST_CASE("uniform_below stays in range and hits every value") {
    std::mt19937_64 rng(5);
    std::vector<int> seen(7, 0);
    for (int i = 0; i < 7000; ++i) {
        auto v = uniform_below(rng, 7);
        REQUIRE(v < 7);
        ++seen[v];
    }
    for (auto c : seen) {
        CHECK(c > 800);
    }
}

TEST_CASE("random_rooted_cfg reaches everything from node 0") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto nodes = 1 + seed % 30;
        auto edges = nodes - 1 + seed % (max_random_edges(nodes) - nodes + 2);
        auto g = random_rooted_cfg(nodes, edges, seed);
        CHECK(g.edge_count() == edges);
        CHECK(g.label(0) == "0");
        CHECK(reachable_set(g, 0).count() == nodes);
    }
    CHECK_THROWS_AS(random_rooted_cfg(5, 3, 1), std::invalid_argument);
}

TEST_CASE("random_reducible_cfg") {
    CHECK(random_reducible_cfg(0, 1).size() == 1);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto g = random_reducible_cfg(1 + seed % 5, seed);
        CHECK(g.label(0) == "0");
        CHECK(reachable_set(g, 0).count() == g.size());
        CHECK(graph_oracles::collapses_to_one_node(g));
        CHECK(random_reducible_cfg(1 + seed % 5, seed) == g);
    }
}

TEST_CASE("reduction checker rejects the irreducible pair") {
    CfgBuilder b;
    for (const auto *l : {"a", "b", "c"}) {
        b.add_node(l);
    }
    b.add_edge("a", "b");
    b.add_edge("a", "c");
    b.add_edge("b", "c");
    b.add_edge("c", "b");
    CHECK_FALSE(graph_oracles::collapses_to_one_node(std::move(b).build()));
}

TEST_CASE("random_cycle_fed_cfg") {
    std::size_t with_dod = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto g = random_cycle_fed_cfg(12, seed);
        CHECK(g.size() >= 3);
        CHECK(g.size() <= 12);
        CHECK(random_cycle_fed_cfg(12, seed) == g);
        auto p = sccs(g);
        CHECK(std::count(p.nontrivial.begin(), p.nontrivial.end(), true) >= 1);
        with_dod += !oracle::dod(g).empty();
    }
    CHECK(with_dod > 100);
    CHECK(random_cycle_fed_cfg(3, 1).size() == 3);
    CHECK_THROWS_AS(random_cycle_fed_cfg(2, 1), std::invalid_argument);
}

TEST_CASE("worst_case_dod_cfg") {
    auto g8 = worst_case_dod_cfg(8);
    CHECK(g8.size() == 8);
    CHECK(predicates(g8).size() == 4);
    CHECK(oracle::dod(g8).size() == 16);
    CHECK(dod_new(worst_case_dod_cfg(16)).size() == 128);
    CHECK_THROWS_AS(worst_case_dod_cfg(10), std::invalid_argument);
    CHECK_THROWS_AS(worst_case_dod_cfg(4), std::invalid_argument);
}
