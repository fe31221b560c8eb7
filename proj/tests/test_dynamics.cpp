#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "nobelnet/dynamics.hpp"
#include "nobelnet/rng.hpp"
#include "nobelnet/synthetic.hpp"
#include "support.hpp"

namespace nn = nobelnet;
using testsup::edge;
using testsup::person;

namespace {

using EdgeTriple = std::tuple<std::string, std::string, nn::EdgeKind>;

std::set<std::string> node_ids(const nn::GenealogyGraph& g) {
    std::set<std::string> s;
    for (const auto& p : g.persons()) s.insert(p.id);
    return s;
}

std::set<EdgeTriple> edge_triples(const nn::GenealogyGraph& g) {
    std::set<EdgeTriple> s;
    for (const auto& e : g.edges()) s.insert({e.advisor_id, e.student_id, e.kind});
    return s;
}

std::size_t diff_size(const auto& prev, const auto& next) {
    std::size_t n = 0;
    for (const auto& x : next)
        if (!prev.contains(x)) ++n;
    return n;
}

}  // namespace

TEST_CASE("edit_series on the fixture: two insertions per award year") {
    auto universe = testsup::graph(testsup::fixture_one().persons, testsup::fixture_one().edges);
    auto series = nn::build_series(universe, testsup::fixture_one_cohorts());
    auto deltas = nn::edit_series(series);

    REQUIRE(deltas.size() == 2);
    CHECK(deltas[0].year == 1972);
    CHECK(deltas[0].nodes_added == 1);
    CHECK(deltas[0].edges_added == 1);
    CHECK(deltas[0].total == 2);
    CHECK(deltas[0].components_before == 1);
    CHECK(deltas[0].components_after == 1);
    CHECK(deltas[1].year == 1975);
    CHECK(deltas[1].total == 2);
}

TEST_CASE("edit_delta refuses non-nested snapshots") {
    auto universe = testsup::graph(testsup::fixture_one().persons, testsup::fixture_one().edges);
    auto series = nn::build_series(universe, testsup::fixture_one_cohorts());

    try {
        nn::edit_delta(series[1], series[0]);  // reversed: nodes were "removed"
        FAIL_CHECK("expected DatasetError");
    } catch (const nn::DatasetError& e) {
        REQUIRE_FALSE(e.findings().empty());
        CHECK(e.findings()[0].code == "not-a-subgraph");
    }

    // same nodes but an edge vanished
    auto full = nn::snapshot_of_graph(universe, 1975);
    std::vector<nn::OverlayEdit> drop(1);
    drop[0].action = nn::OverlayEdit::Action::remove_edge;
    drop[0].edge = edge("P", "B");
    auto dropped = nn::snapshot_of_graph(nn::apply_overlay(universe, drop), 1975);
    CHECK_THROWS_AS(nn::edit_delta(full, dropped), nn::DatasetError);
    CHECK_NOTHROW(nn::edit_delta(dropped, full));
}

TEST_CASE("edit_delta equals brute set difference on random growth") {
    nn::SplitMix rng{2024};
    for (int trial = 0; trial < 25; ++trial) {
        auto g = nn::synthetic_dag({.seed = rng.next(), .nodes = 30, .max_advisors = 3});

        // nested node sets: a random permutation revealed in random increments
        std::vector<nn::NodeIndex> order(g.node_count());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<nn::NodeIndex>(i);
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[rng.bounded(i)]);

        std::vector<nn::Snapshot> chain;
        std::size_t taken = 0;
        int year = 1970;
        while (taken < order.size()) {
            taken = std::min(order.size(), taken + 1 + rng.bounded(8));
            chain.push_back(nn::snapshot_of_graph(
                g.induced(std::span(order).first(taken)), year++));
        }
        if (chain.size() < 2) continue;

        std::size_t sum_nodes = 0, sum_edges = 0;
        for (std::size_t i = 1; i < chain.size(); ++i) {
            auto d = nn::edit_delta(chain[i - 1], chain[i]);
            const auto& pg = chain[i - 1].graph();
            const auto& ng = chain[i].graph();
            CHECK(d.nodes_added == diff_size(node_ids(pg), node_ids(ng)));
            CHECK(d.edges_added == diff_size(edge_triples(pg), edge_triples(ng)));
            CHECK(d.total == d.nodes_added + d.edges_added);
            CHECK(d.components_before == nn::components(pg).size());
            CHECK(d.components_after == nn::components(ng).size());
            sum_nodes += d.nodes_added;
            sum_edges += d.edges_added;
        }
        // conservation: the deltas add up to the final-minus-initial sizes
        CHECK(sum_nodes == chain.back().graph().node_count() - chain.front().graph().node_count());
        CHECK(sum_edges == chain.back().graph().edge_count() - chain.front().graph().edge_count());
    }
}

TEST_CASE("components ignore edge direction and label by smallest id") {
    auto g = testsup::graph({person("a"), person("b"), person("c"), person("d"), person("z")},
                            {edge("a", "b"), edge("c", "d")});
    auto comps = nn::components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0].label == "a");
    CHECK(comps[0].members.size() == 2);
    CHECK(comps[1].label == "c");
    CHECK(comps[2].label == "z");
    CHECK(comps[2].members.size() == 1);
    for (const auto& c : comps) CHECK(std::is_sorted(c.members.begin(), c.members.end()));

    // siblings under one advisor are weakly connected through it
    auto fam = testsup::graph({person("kid1"), person("kid2"), person("prof")},
                              {edge("prof", "kid1"), edge("prof", "kid2")});
    CHECK(nn::components(fam).size() == 1);

    CHECK(nn::components(nn::GenealogyGraph{}).empty());
}

TEST_CASE("descendant_subgraph walks advisor->student edges only") {
    auto universe = testsup::graph(testsup::fixture_one().persons, testsup::fixture_one().edges);

    auto from_a = nn::descendant_subgraph(universe, "A");
    CHECK(node_ids(from_a) == std::set<std::string>{"A", "C"});
    CHECK(from_a.edge_count() == 1);

    auto from_p = nn::descendant_subgraph(universe, "P");
    CHECK(from_p.node_count() == 4);
    CHECK(from_p.edge_count() == 3);

    auto from_c = nn::descendant_subgraph(universe, "C");
    CHECK(from_c.node_count() == 1);
    CHECK(from_c.edge_count() == 0);

    CHECK_THROWS_AS(nn::descendant_subgraph(universe, "ghost"), nn::DatasetError);

    // snapshot overload sees the snapshot graph, not the universe
    auto snap = nn::build_snapshot(universe, testsup::fixture_one_cohorts(), 1970);
    CHECK(nn::descendant_subgraph(snap, "P").node_count() == 2);
}

TEST_CASE("descendants are exactly the finite-distance set") {
    auto g = nn::synthetic_dag({.seed = 5, .nodes = 40});
    auto dist = testsup::floyd_warshall(g);
    for (nn::NodeIndex root : {nn::NodeIndex{0}, nn::NodeIndex{7}, nn::NodeIndex{20}}) {
        auto sub = nn::descendant_subgraph(g, g.person(root).id);
        std::set<std::string> expect;
        for (nn::NodeIndex v = 0; v < g.node_count(); ++v)
            if (dist[root][v] != testsup::kUnreach) expect.insert(g.person(v).id);
        CHECK(node_ids(sub) == expect);
    }
}
