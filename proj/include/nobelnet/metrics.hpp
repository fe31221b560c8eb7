#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nobelnet/construct.hpp"
#include "nobelnet/kernels.hpp"

namespace nobelnet {

enum class Measure { arithmetic, harmonic };
std::string_view to_string(Measure m);
std::optional<Measure> measure_from_string(std::string_view s);

/// Target universe for incloseness: every other node, or laureates only.
enum class TargetMode { network, laureates };
std::string_view to_string(TargetMode m);
std::optional<TargetMode> target_mode_from_string(std::string_view s);

/// Directed distances from one source to the laureate targets of a snapshot.
/// Unreachable targets are absent; the source never appears as its own target.
struct DistanceRow {
    std::string source;
    std::map<std::string, int> distances;
};

/// Per-node centrality summary. reachable_nobel is the count of laureate
/// targets with a finite directed distance; total_nodes the snapshot size.
struct CentralityRecord {
    std::string id;
    std::size_t reachable_nobel = 0;
    std::size_t total_nodes = 0;
    double arithmetic = 0.0;
    double harmonic = 0.0;
};

/// Competition ranking: equal scores share a rank, the next distinct score
/// resumes at its 1-based position. Rows are score-descending, ties by id.
struct RankTable {
    struct Row {
        int rank = 0;
        std::string id;
        double score = 0.0;
    };

    Measure measure = Measure::harmonic;
    std::vector<Row> rows;
    std::string tie_rule = "competition";

    std::optional<int> rank_of(std::string_view id) const;
};

DistanceRow nobel_distances(const Snapshot& snapshot, std::string_view source_id);

/// (A/(N-1))^2 / Σ C over reachable laureate targets; 0 when none reachable.
/// N counts all snapshot nodes.
double arithmetic_centrality(const Snapshot& snapshot, std::string_view node_id);

/// Mean of inverse distances over the snapshot's laureate targets other than
/// the node itself; unreachable targets contribute 0.
double harmonic_centrality(const Snapshot& snapshot, std::string_view node_id);

/// Both measures for every node, in node order.
std::vector<CentralityRecord> centrality_all(const Snapshot& snapshot,
                                             Exec exec = Exec::parallel);

/// Harmonic form over reversed distances (how near the node's ancestors are).
double incloseness(const Snapshot& snapshot, std::string_view node_id, TargetMode mode);

RankTable rank_table(const Snapshot& snapshot, Measure measure, Exec exec = Exec::parallel);

/// Ranks an externally supplied id→score list with the same tie rules.
RankTable rank_table_from_scores(Measure measure,
                                 std::vector<std::pair<std::string, double>> scores);

struct RankHistoryRow {
    int year = 0;
    std::string id;
    double score = 0.0;
    int rank = 0;
};

/// Rank per subject per snapshot year; subjects absent from a snapshot
/// produce no row for that year.
std::vector<RankHistoryRow> rank_history(const NetworkSeries& series, Measure measure,
                                         std::span<const std::string> subjects,
                                         Exec exec = Exec::parallel);

/// Marks the given candidates (attached with their ancestries from the
/// universe) as laureates, recomputes the harmonic table, and reports
/// new-rank minus old-rank for every node of the original snapshot.
std::map<std::string, int> counterfactual_rank_delta(const GenealogyGraph& universe,
                                                     const Snapshot& snapshot,
                                                     std::span<const std::string> candidate_ids,
                                                     Exec exec = Exec::parallel);

}  // namespace nobelnet
