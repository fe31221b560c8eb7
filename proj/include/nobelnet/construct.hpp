#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nobelnet/core.hpp"

namespace nobelnet {

inline constexpr int kGenerationDepth = 5;

/// Award cohorts: prize year -> laureate ids in announcement order.
struct Cohorts {
    std::map<int, std::vector<std::string>> years;

    bool empty() const { return years.empty(); }
    int first_year() const { return years.begin()->first; }
    int last_year() const { return years.rbegin()->first; }
};

enum class IncludeReason { laureate, ancestor, connector, candidate };
std::string_view to_string(IncludeReason r);

/// One yearly network: the universe restricted to every node pulled in by the
/// construction rules, with the reason each node is present. The Nobel target
/// set (laureates awarded by `year`) is precomputed for the metric kernels.
class Snapshot {
public:
    Snapshot() = default;
    Snapshot(int year, GenealogyGraph graph, std::map<std::string, IncludeReason> reasons);

    int year() const { return year_; }
    const GenealogyGraph& graph() const { return graph_; }
    const std::map<std::string, IncludeReason>& included_reason() const { return reasons_; }

    /// Laureate node indices for this snapshot year, ascending.
    std::span<const NodeIndex> nobel_targets() const { return targets_; }
    bool is_nobel_target(NodeIndex i) const { return is_target_[i]; }

    /// Copy with extra ids treated as laureates (counterfactual analyses).
    Snapshot with_marked_laureates(std::span<const std::string> ids) const;

private:
    int year_ = 0;
    GenealogyGraph graph_;
    std::map<std::string, IncludeReason> reasons_;
    std::vector<NodeIndex> targets_;
    std::vector<char> is_target_;
};

using NetworkSeries = std::vector<Snapshot>;

struct OverlayEdit {
    enum class Action { add_edge, remove_edge, add_person };
    Action action = Action::add_edge;
    AdvisingEdge edge;   // add_edge / remove_edge payload
    Person person;       // add_person payload
};

/// Nodes reachable from `person` by walking advisor links for at most
/// `max_depth` steps, the person included. Ascending universe indices.
std::vector<NodeIndex> ancestor_closure(const GenealogyGraph& universe, NodeIndex person,
                                        int max_depth);

struct CommonAncestor {
    std::string ancestor_id;
    int distance = 0;                    // depth to the laureate + depth to the existing set
    std::vector<NodeIndex> path_nodes;   // every node on a minimal witness path, both legs
};

/// Closest ancestor of `new_laureate` (any depth, the laureate itself
/// allowed) that is an ancestor of or member of `existing`, minimizing the
/// summed depth of the two legs. Ties break towards the smaller total, then
/// the lexicographically smallest ancestor id.
std::optional<CommonAncestor> closest_common_ancestor(const GenealogyGraph& universe,
                                                      NodeIndex new_laureate,
                                                      std::span<const NodeIndex> existing);

/// Extends `prev` (or starts fresh) with the cohort of `year`: each new
/// laureate brings its bounded ancestor closure, plus connector paths through
/// the closest common ancestor when the closure would otherwise land in a
/// separate component.
Snapshot build_year(const GenealogyGraph& universe, const Cohorts& cohorts, int year,
                    const Snapshot* prev);

/// One snapshot per cohort year, each built on top of the previous.
NetworkSeries build_series(const GenealogyGraph& universe, const Cohorts& cohorts);

/// Single-pass rebuild of the snapshot for `year` without intermediate
/// snapshots; equals the chained construction.
Snapshot build_snapshot(const GenealogyGraph& universe, const Cohorts& cohorts, int year);

/// Snapshot over an entire graph as-is (no construction rules); every node is
/// kept and laureates up to `year` become targets.
Snapshot snapshot_of_graph(GenealogyGraph graph, int year);

/// Applies edits in order to a copy; the result is revalidated, so an edit
/// introducing a cycle or referencing a missing target throws DatasetError.
GenealogyGraph apply_overlay(const GenealogyGraph& graph, std::span<const OverlayEdit> edits);

/// Union of the unbounded ancestor closures of all laureates, truncated so
/// that no proper ancestor of a cutoff root survives.
GenealogyGraph expand_full(const GenealogyGraph& universe,
                           std::span<const std::string> cutoff_roots);

/// Attaches candidates to a snapshot the same way laureates are attached
/// (bounded closure + connector paths), without marking them as targets.
Snapshot attach_candidates(const GenealogyGraph& universe, const Snapshot& snapshot,
                           std::span<const std::string> candidate_ids);

/// Cohort sanity against raw data: unknown ids and non-laureate entries are
/// errors; a prize year disagreeing with the cohort year is a warning.
ValidationReport validate_cohorts(const Dataset& ds, const Cohorts& cohorts);

}  // namespace nobelnet
