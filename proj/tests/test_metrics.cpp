#include <doctest.h>

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "nobelnet/metrics.hpp"
#include "nobelnet/synthetic.hpp"
#include "support.hpp"

namespace nn = nobelnet;
using testsup::person;

namespace {

nn::Snapshot fixture_snapshot(int year) {
    auto g = testsup::graph(testsup::fixture_one().persons, testsup::fixture_one().edges);
    return nn::snapshot_of_graph(std::move(g), year);
}

}  // namespace

TEST_CASE("nobel_distances: reachable laureate targets only, never self") {
    auto snap = fixture_snapshot(1975);
    auto row = nn::nobel_distances(snap, "P");
    CHECK(row.source == "P");
    CHECK(row.distances == std::map<std::string, int>{{"A", 1}, {"B", 1}, {"C", 2}});

    CHECK(nn::nobel_distances(snap, "A").distances == std::map<std::string, int>{{"C", 1}});
    CHECK(nn::nobel_distances(snap, "C").distances.empty());
    CHECK_THROWS_AS(nn::nobel_distances(snap, "nobody"), nn::DatasetError);
}

TEST_CASE("worked fixture: exact closed-form centralities") {
    auto snap = fixture_snapshot(1975);
    // P reaches all three laureates at 1+1+2: (3/3)^2 / 4
    CHECK(nn::arithmetic_centrality(snap, "P") == doctest::Approx(0.25).epsilon(1e-12));
    // A reaches one of three laureates at distance 1: (1/3)^2 / 1
    CHECK(nn::arithmetic_centrality(snap, "A") == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
    CHECK(nn::arithmetic_centrality(snap, "C") == 0.0);

    // P: (1/1 + 1/1 + 1/2) / 3; A: (1/1) / 2 against targets {B, C}
    CHECK(nn::harmonic_centrality(snap, "P") == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
    CHECK(nn::harmonic_centrality(snap, "A") == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(nn::harmonic_centrality(snap, "B") == 0.0);
    CHECK(nn::harmonic_centrality(snap, "C") == 0.0);
}

TEST_CASE("earlier snapshot year shrinks the target set") {
    auto snap = fixture_snapshot(1972);  // C not yet a laureate
    // P reaches A and B at 1+1 while N is still 4: (2/3)^2 / 2
    CHECK(nn::arithmetic_centrality(snap, "P") == doctest::Approx(2.0 / 9.0).epsilon(1e-12));
    // A's only target is B, unreachable
    CHECK(nn::harmonic_centrality(snap, "A") == 0.0);
}

TEST_CASE("centrality_all matches the brute-force oracle, serial and parallel") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto g = nn::synthetic_dag({.seed = seed, .nodes = 35, .max_advisors = 3});
        auto dist = testsup::floyd_warshall(g);
        auto targets = testsup::targets_at(g, 2021);
        auto snap = nn::snapshot_of_graph(g, 2021);

        auto serial = nn::centrality_all(snap, nn::Exec::serial);
        auto parallel = nn::centrality_all(snap, nn::Exec::parallel);
        REQUIRE(serial.size() == g.node_count());

        for (std::size_t i = 0; i < serial.size(); ++i) {
            CHECK(serial[i].id == g.person(static_cast<nn::NodeIndex>(i)).id);
            CHECK(serial[i].id == parallel[i].id);
            CHECK(serial[i].arithmetic == parallel[i].arithmetic);
            CHECK(serial[i].harmonic == parallel[i].harmonic);

            const auto ni = static_cast<nn::NodeIndex>(i);
            const double oracle_a = testsup::oracle_arithmetic(dist, targets, ni, g.node_count());
            const double oracle_h = testsup::oracle_harmonic(dist, targets, ni);
            CHECK(serial[i].arithmetic == doctest::Approx(oracle_a).epsilon(1e-12));
            CHECK(serial[i].harmonic == doctest::Approx(oracle_h).epsilon(1e-12));
            CHECK(serial[i].total_nodes == g.node_count());

            // single-node entry points agree with the batch
            CHECK(nn::arithmetic_centrality(snap, serial[i].id) == serial[i].arithmetic);
            CHECK(nn::harmonic_centrality(snap, serial[i].id) == serial[i].harmonic);
        }
    }
}

TEST_CASE("degenerate snapshots score zero") {
    auto lone = nn::snapshot_of_graph(testsup::graph({person("solo", "", true, 1970)}, {}), 1975);
    CHECK(nn::arithmetic_centrality(lone, "solo") == 0.0);
    CHECK(nn::harmonic_centrality(lone, "solo") == 0.0);
    CHECK(nn::centrality_all(lone).size() == 1);
}

TEST_CASE("incloseness: ancestors feed the score, mode picks the targets") {
    auto snap = fixture_snapshot(1975);
    // C's laureate ancestors: A at 1 (B is unrelated): (1/1) / |{A,B}|
    CHECK(nn::incloseness(snap, "C", nn::TargetMode::laureates) == doctest::Approx(0.5));
    // network mode adds P at distance 2: (1 + 1/2) / 3
    CHECK(nn::incloseness(snap, "C", nn::TargetMode::network) == doctest::Approx(0.5));
    // roots have no ancestors at all
    CHECK(nn::incloseness(snap, "P", nn::TargetMode::laureates) == 0.0);
    CHECK(nn::incloseness(snap, "P", nn::TargetMode::network) == 0.0);
    // B's only ancestor is P, not a laureate
    CHECK(nn::incloseness(snap, "B", nn::TargetMode::laureates) == 0.0);
    CHECK(nn::incloseness(snap, "B", nn::TargetMode::network) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("rank tables use competition ranking with id tie order") {
    auto table = nn::rank_table_from_scores(
        nn::Measure::harmonic, {{"d", 1.0}, {"b", 2.0}, {"a", 3.0}, {"c", 2.0}});
    REQUIRE(table.rows.size() == 4);
    CHECK(table.rows[0].id == "a");
    CHECK(table.rows[0].rank == 1);
    CHECK(table.rows[1].id == "b");
    CHECK(table.rows[1].rank == 2);
    CHECK(table.rows[2].id == "c");
    CHECK(table.rows[2].rank == 2);
    CHECK(table.rows[3].id == "d");
    CHECK(table.rows[3].rank == 4);  // competition: rank 3 is skipped
    CHECK(table.tie_rule == "competition");
    CHECK(table.rank_of("c") == 2);
    CHECK_FALSE(table.rank_of("zz").has_value());
}

TEST_CASE("rank_table on the fixture") {
    auto table = nn::rank_table(fixture_snapshot(1975), nn::Measure::harmonic);
    REQUIRE(table.rows.size() == 4);
    CHECK(table.rows[0].id == "P");
    CHECK(table.rows[0].rank == 1);
    CHECK(table.rows[1].id == "A");
    CHECK(table.rows[1].rank == 2);
    CHECK(table.rows[2].rank == 3);
    CHECK(table.rows[3].rank == 3);
}

TEST_CASE("rank invariance under positive rescaling") {
    auto g = nn::synthetic_dag({.seed = 21, .nodes = 30});
    auto base = nn::centrality_all(nn::snapshot_of_graph(g, 2021));
    for (double scale : {1e-6, 3.0, 1e9}) {
        std::vector<std::pair<std::string, double>> raw, scaled;
        for (const auto& r : base) {
            raw.emplace_back(r.id, r.harmonic);
            scaled.emplace_back(r.id, r.harmonic * scale);
        }
        auto t1 = nn::rank_table_from_scores(nn::Measure::harmonic, raw);
        auto t2 = nn::rank_table_from_scores(nn::Measure::harmonic, scaled);
        REQUIRE(t1.rows.size() == t2.rows.size());
        for (std::size_t i = 0; i < t1.rows.size(); ++i) {
            CHECK(t1.rows[i].id == t2.rows[i].id);
            CHECK(t1.rows[i].rank == t2.rows[i].rank);
        }
    }
}

TEST_CASE("rank_history tracks subjects across years") {
    auto universe = testsup::graph(testsup::fixture_one().persons, testsup::fixture_one().edges);
    auto series = nn::build_series(universe, testsup::fixture_one_cohorts());

    std::vector<std::string> subjects = {"P", "C"};
    auto hist = nn::rank_history(series, nn::Measure::harmonic, subjects);
    // P exists in every snapshot, C only from 1975
    REQUIRE(hist.size() == 4);
    CHECK(hist[0].year == 1970);
    CHECK(hist[0].id == "P");
    CHECK(hist[0].rank == 1);
    CHECK(hist[1].year == 1972);
    CHECK(hist[1].id == "P");
    // within a year rows follow the subject list, so P precedes C
    CHECK(hist[2].year == 1975);
    CHECK(hist[2].id == "P");
    CHECK(hist[2].rank == 1);
    CHECK(hist[2].score == doctest::Approx(5.0 / 6.0));
    CHECK(hist[3].year == 1975);
    CHECK(hist[3].id == "C");
    CHECK(hist[3].rank == 3);
}

TEST_CASE("counterfactual_rank_delta reports shifts for the original nodes") {
    nn::Dataset ds = testsup::fixture_one();
    nn::Person x = person("X", "Xena Chi", false, std::nullopt, 1990, "U3");
    x.candidate = true;
    ds.persons.push_back(x);
    ds.edges.push_back(testsup::edge("C", "X"));
    auto universe = testsup::graph(ds.persons, ds.edges);

    auto snap = nn::build_snapshot(universe, testsup::fixture_one_cohorts(), 1972);
    std::vector<std::string> cands = {"X"};
    auto delta = nn::counterfactual_rank_delta(universe, snap, cands);

    // marking X pulls C into the network above A; B loses its tie with A
    // (before: P 1, A 2, B 2 — after: P 1, C 2, A 3, B 4)
    REQUIRE(delta.size() == 3);
    CHECK(delta.at("P") == 0);
    CHECK(delta.at("A") == 1);
    CHECK(delta.at("B") == 2);
}

TEST_CASE("measure and mode string conversions") {
    CHECK(nn::measure_from_string("arithmetic") == nn::Measure::arithmetic);
    CHECK(nn::measure_from_string("harmonic") == nn::Measure::harmonic);
    CHECK_FALSE(nn::measure_from_string("geometric").has_value());
    CHECK(nn::to_string(nn::Measure::arithmetic) == "arithmetic");
    CHECK(nn::target_mode_from_string("network") == nn::TargetMode::network);
    CHECK(nn::target_mode_from_string("laureates") == nn::TargetMode::laureates);
    CHECK_FALSE(nn::target_mode_from_string("both").has_value());
}
