#pragma once

// Shared fixtures and independent oracles for the test suite. The oracles
// deliberately avoid the library's BFS kernels: distances come from
// Floyd-Warshall (or exhaustive path enumeration on tiny graphs) built
// straight from the edge list, so a kernel bug cannot cancel out.

#include <unistd.h>

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "nobelnet/construct.hpp"
#include "nobelnet/core.hpp"

namespace testsup {

namespace nn = nobelnet;

inline constexpr int kUnreach = -1;

inline nn::Person person(std::string id, std::string name = "", bool laureate = false,
                         std::optional<int> prize_year = std::nullopt,
                         std::optional<int> degree_year = std::nullopt,
                         std::optional<std::string> institution = std::nullopt) {
    nn::Person p;
    p.id = std::move(id);
    p.name = name.empty() ? p.id : std::move(name);
    p.laureate = laureate;
    p.prize_year = prize_year;
    p.degree_year = degree_year;
    p.degree_institution = std::move(institution);
    p.sources = {"test"};
    return p;
}

inline nn::AdvisingEdge edge(std::string advisor, std::string student,
                             nn::EdgeKind kind = nn::EdgeKind::phd) {
    return nn::AdvisingEdge{std::move(advisor), std::move(student), kind, "test"};
}

inline nn::GenealogyGraph graph(std::vector<nn::Person> persons,
                                std::vector<nn::AdvisingEdge> edges) {
    nn::Dataset ds;
    ds.persons = std::move(persons);
    ds.edges = std::move(edges);
    return nn::GenealogyGraph::build(std::move(ds));
}

/// All-pairs directed distances along advisor->student edges, straight from
/// the id-level edge list. dist[i][j] in hops, kUnreach if no path.
inline std::vector<std::vector<int>> floyd_warshall(const nn::GenealogyGraph& g) {
    const std::size_t n = g.node_count();
    constexpr int inf = std::numeric_limits<int>::max() / 4;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (const auto& e : g.edges()) {
        auto a = g.find(e.advisor_id);
        auto s = g.find(e.student_id);
        d[*a][*s] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (d[i][k] >= inf) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
        }
    for (auto& row : d)
        for (auto& v : row)
            if (v >= inf) v = kUnreach;
    return d;
}

/// Shortest path by exhaustive simple-path enumeration; only for tiny graphs.
inline int enumerate_shortest(const nn::GenealogyGraph& g, nn::NodeIndex from,
                              nn::NodeIndex to) {
    if (from == to) return 0;
    const std::size_t n = g.node_count();
    std::vector<std::vector<nn::NodeIndex>> adj(n);
    for (const auto& e : g.edges()) adj[*g.find(e.advisor_id)].push_back(*g.find(e.student_id));
    int best = kUnreach;
    std::vector<char> used(n, 0);
    auto dfs = [&](auto&& self, nn::NodeIndex at, int len) -> void {
        if (at == to) {
            if (best == kUnreach || len < best) best = len;
            return;
        }
        used[at] = 1;
        for (nn::NodeIndex next : adj[at])
            if (!used[next]) self(self, next, len + 1);
        used[at] = 0;
    };
    dfs(dfs, from, 0);
    return best;
}

/// Laureate target indices for a plain graph at a given year (prize awarded
/// by then), ascending.
inline std::vector<nn::NodeIndex> targets_at(const nn::GenealogyGraph& g, int year) {
    std::vector<nn::NodeIndex> t;
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        const auto& p = g.person(static_cast<nn::NodeIndex>(i));
        if (p.laureate && p.prize_year && *p.prize_year <= year)
            t.push_back(static_cast<nn::NodeIndex>(i));
    }
    return t;
}

/// Arithmetic outcloseness recomputed from an oracle distance matrix.
inline double oracle_arithmetic(const std::vector<std::vector<int>>& dist,
                                const std::vector<nn::NodeIndex>& targets, nn::NodeIndex i,
                                std::size_t node_count) {
    if (node_count < 2) return 0.0;
    double reached = 0.0, sum = 0.0;
    for (nn::NodeIndex t : targets) {
        if (t == i || dist[i][t] == kUnreach) continue;
        reached += 1.0;
        sum += dist[i][t];
    }
    if (reached == 0.0) return 0.0;
    const double frac = reached / static_cast<double>(node_count - 1);
    return frac * frac / sum;
}

/// Harmonic outcloseness (mean inverse distance over all targets but self).
inline double oracle_harmonic(const std::vector<std::vector<int>>& dist,
                              const std::vector<nn::NodeIndex>& targets, nn::NodeIndex i) {
    double m = 0.0, sum = 0.0;
    for (nn::NodeIndex t : targets) {
        if (t == i) continue;
        m += 1.0;
        if (dist[i][t] != kUnreach) sum += 1.0 / dist[i][t];
    }
    return m == 0.0 ? 0.0 : sum / m;
}

/// Self-cleaning unique temp directory.
class TempDir {
public:
    TempDir() {
        static std::atomic<std::uint64_t> counter{0};
        const auto id = counter.fetch_add(1);
        path_ = std::filesystem::temp_directory_path() /
                ("nobelnet-test-" + std::to_string(::getpid()) + "-" + std::to_string(id));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

/// The worked four-person fixture: two laureate generations under a common
/// advisor, used across module tests. Matches data/f1 on disk.
inline nn::Dataset fixture_one() {
    nn::Dataset ds;
    ds.persons = {
        person("A", "Ada Alpha", true, 1970, 1930, "U1"),
        person("B", "Ben Beta", true, 1972, 1932, "U1"),
        person("C", "Cleo Gamma", true, 1975, 1960, "U3"),
        person("P", "Paul Prime", false, std::nullopt, 1900, "U2"),
    };
    ds.edges = {edge("A", "C"), edge("P", "A"), edge("P", "B")};
    return ds;
}

inline nn::Cohorts fixture_one_cohorts() {
    nn::Cohorts c;
    c.years[1970] = {"A"};
    c.years[1972] = {"B"};
    c.years[1975] = {"C"};
    return c;
}

}  // namespace testsup
