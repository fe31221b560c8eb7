#include "nobelnet/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace nobelnet {

std::string_view to_string(Measure m) {
    return m == Measure::arithmetic ? "arithmetic" : "harmonic";
}

std::optional<Measure> measure_from_string(std::string_view s) {
    if (s == "arithmetic") return Measure::arithmetic;
    if (s == "harmonic") return Measure::harmonic;
    return std::nullopt;
}

std::string_view to_string(TargetMode m) {
    return m == TargetMode::network ? "network" : "laureates";
}

std::optional<TargetMode> target_mode_from_string(std::string_view s) {
    if (s == "network") return TargetMode::network;
    if (s == "laureates") return TargetMode::laureates;
    return std::nullopt;
}

std::optional<int> RankTable::rank_of(std::string_view id) const {
    for (const Row& row : rows)
        if (row.id == id) return row.rank;
    return std::nullopt;
}

namespace {

struct NodeScores {
    std::size_t reachable = 0;
    double arithmetic = 0.0;
    double harmonic = 0.0;
};

/// Applies both formulas to one row of target distances. `self` is the
/// node's slot in `targets` (or npos), excluded from every sum.
NodeScores score_from_distances(std::span<const std::uint32_t> dist,
                                std::span<const NodeIndex> targets, NodeIndex node,
                                std::size_t n_nodes) {
    NodeScores s;
    std::uint64_t dist_sum = 0;
    double inv_sum = 0.0;
    std::size_t m = 0;  // targets other than the node itself
    for (std::size_t t = 0; t < targets.size(); ++t) {
        if (targets[t] == node) continue;
        ++m;
        if (dist[t] == kUnreachable) continue;
        ++s.reachable;
        dist_sum += dist[t];
        inv_sum += 1.0 / dist[t];
    }
    if (s.reachable > 0) {
        double frac = static_cast<double>(s.reachable) / static_cast<double>(n_nodes - 1);
        s.arithmetic = frac * frac / static_cast<double>(dist_sum);
        s.harmonic = inv_sum / static_cast<double>(m);
    }
    return s;
}

std::vector<std::uint32_t> target_distances(const Snapshot& snapshot, NodeIndex source) {
    const GenealogyGraph& g = snapshot.graph();
    std::vector<std::uint32_t> dist(g.node_count());
    bfs_distances(g, source, Dir::down, dist);
    std::vector<std::uint32_t> out;
    out.reserve(snapshot.nobel_targets().size());
    for (NodeIndex t : snapshot.nobel_targets()) out.push_back(dist[t]);
    return out;
}

}  // namespace

DistanceRow nobel_distances(const Snapshot& snapshot, std::string_view source_id) {
    const GenealogyGraph& g = snapshot.graph();
    NodeIndex source = g.require(source_id);
    std::vector<std::uint32_t> dist(g.node_count());
    bfs_distances(g, source, Dir::down, dist);
    DistanceRow row;
    row.source = std::string(source_id);
    for (NodeIndex t : snapshot.nobel_targets())
        if (t != source && dist[t] != kUnreachable)
            row.distances.emplace(g.person(t).id, static_cast<int>(dist[t]));
    return row;
}

double arithmetic_centrality(const Snapshot& snapshot, std::string_view node_id) {
    NodeIndex node = snapshot.graph().require(node_id);
    return score_from_distances(target_distances(snapshot, node), snapshot.nobel_targets(), node,
                                snapshot.graph().node_count())
        .arithmetic;
}

double harmonic_centrality(const Snapshot& snapshot, std::string_view node_id) {
    NodeIndex node = snapshot.graph().require(node_id);
    return score_from_distances(target_distances(snapshot, node), snapshot.nobel_targets(), node,
                                snapshot.graph().node_count())
        .harmonic;
}

std::vector<CentralityRecord> centrality_all(const Snapshot& snapshot, Exec exec) {
    const GenealogyGraph& g = snapshot.graph();
    const std::size_t n = g.node_count();
    std::vector<NodeIndex> sources(n);
    for (NodeIndex i = 0; i < n; ++i) sources[i] = i;

    std::vector<std::uint32_t> dist =
        distances_to_targets(g, sources, snapshot.nobel_targets(), Dir::down, exec);
    const std::size_t width = snapshot.nobel_targets().size();

    std::vector<CentralityRecord> out(n);
    for (NodeIndex i = 0; i < n; ++i) {
        std::span<const std::uint32_t> row(dist.data() + std::size_t{i} * width, width);
        NodeScores s = score_from_distances(row, snapshot.nobel_targets(), i, n);
        out[i] = {g.person(i).id, s.reachable, n, s.arithmetic, s.harmonic};
    }
    return out;
}

double incloseness(const Snapshot& snapshot, std::string_view node_id, TargetMode mode) {
    const GenealogyGraph& g = snapshot.graph();
    NodeIndex node = g.require(node_id);
    std::vector<std::uint32_t> dist(g.node_count());
    bfs_distances(g, node, Dir::up, dist);  // dist[j] = directed distance j -> node

    double inv_sum = 0.0;
    std::size_t m = 0;
    auto add = [&](NodeIndex j) {
        if (j == node) return;
        ++m;
        if (dist[j] != kUnreachable) inv_sum += 1.0 / dist[j];
    };
    if (mode == TargetMode::network) {
        for (NodeIndex j = 0; j < g.node_count(); ++j) add(j);
    } else {
        for (NodeIndex j : snapshot.nobel_targets()) add(j);
    }
    return m == 0 ? 0.0 : inv_sum / static_cast<double>(m);
}

RankTable rank_table_from_scores(Measure measure,
                                 std::vector<std::pair<std::string, double>> scores) {
    std::sort(scores.begin(), scores.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    RankTable table;
    table.measure = measure;
    table.rows.reserve(scores.size());
    int rank = 0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (i == 0 || scores[i].second != scores[i - 1].second) rank = static_cast<int>(i) + 1;
        table.rows.push_back({rank, std::move(scores[i].first), scores[i].second});
    }
    return table;
}

RankTable rank_table(const Snapshot& snapshot, Measure measure, Exec exec) {
    std::vector<std::pair<std::string, double>> scores;
    for (CentralityRecord& rec : centrality_all(snapshot, exec))
        scores.emplace_back(std::move(rec.id),
                            measure == Measure::arithmetic ? rec.arithmetic : rec.harmonic);
    return rank_table_from_scores(measure, std::move(scores));
}

std::vector<RankHistoryRow> rank_history(const NetworkSeries& series, Measure measure,
                                         std::span<const std::string> subjects, Exec exec) {
    std::vector<RankHistoryRow> out;
    for (const Snapshot& snapshot : series) {
        RankTable table = rank_table(snapshot, measure, exec);
        std::map<std::string_view, const RankTable::Row*> by_id;
        for (const RankTable::Row& row : table.rows) by_id.emplace(row.id, &row);
        for (const std::string& id : subjects) {
            auto it = by_id.find(id);
            if (it == by_id.end()) continue;  // not yet part of the network
            out.push_back({snapshot.year(), id, it->second->score, it->second->rank});
        }
    }
    return out;
}

std::map<std::string, int> counterfactual_rank_delta(const GenealogyGraph& universe,
                                                     const Snapshot& snapshot,
                                                     std::span<const std::string> candidate_ids,
                                                     Exec exec) {
    RankTable before = rank_table(snapshot, Measure::harmonic, exec);

    Snapshot augmented =
        attach_candidates(universe, snapshot, candidate_ids).with_marked_laureates(candidate_ids);
    RankTable after = rank_table(augmented, Measure::harmonic, exec);

    std::map<std::string, int> delta;
    for (const RankTable::Row& row : before.rows) {
        std::optional<int> now = after.rank_of(row.id);
        delta[row.id] = (now ? *now : 0) - row.rank;  // augmented keeps every old node
    }
    return delta;
}

}  // namespace nobelnet
