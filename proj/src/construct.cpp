#include "nobelnet/construct.hpp"

#include <algorithm>
#include <set>

#include "nobelnet/kernels.hpp"

namespace nobelnet {

std::string_view to_string(IncludeReason r) {
    switch (r) {
        case IncludeReason::laureate: return "laureate";
        case IncludeReason::ancestor: return "ancestor";
        case IncludeReason::connector: return "connector";
        default: return "candidate";
    }
}

Snapshot::Snapshot(int year, GenealogyGraph graph, std::map<std::string, IncludeReason> reasons)
    : year_(year), graph_(std::move(graph)), reasons_(std::move(reasons)) {
    is_target_.assign(graph_.node_count(), 0);
    for (NodeIndex i = 0; i < graph_.node_count(); ++i) {
        const Person& p = graph_.person(i);
        if (p.laureate && p.prize_year && *p.prize_year <= year_) {
            targets_.push_back(i);
            is_target_[i] = 1;
        }
    }
}

Snapshot Snapshot::with_marked_laureates(std::span<const std::string> ids) const {
    Snapshot out = *this;
    for (const std::string& id : ids) {
        auto i = out.graph_.find(id);
        if (!i || out.is_target_[*i]) continue;
        out.is_target_[*i] = 1;
        out.targets_.insert(std::upper_bound(out.targets_.begin(), out.targets_.end(), *i), *i);
    }
    return out;
}

std::vector<NodeIndex> ancestor_closure(const GenealogyGraph& universe, NodeIndex person,
                                        int max_depth) {
    std::vector<std::uint32_t> dist(universe.node_count());
    bfs_distances(universe, person, Dir::up, dist);
    std::vector<NodeIndex> out;
    for (NodeIndex i = 0; i < universe.node_count(); ++i)
        if (dist[i] != kUnreachable && dist[i] <= static_cast<std::uint32_t>(max_depth))
            out.push_back(i);
    return out;
}

std::optional<CommonAncestor> closest_common_ancestor(const GenealogyGraph& universe,
                                                      NodeIndex new_laureate,
                                                      std::span<const NodeIndex> existing) {
    if (existing.empty()) return std::nullopt;
    const std::size_t n = universe.node_count();

    // Leg 1: depth of each ancestor above the new laureate (0 for itself).
    std::vector<std::uint32_t> up_from_l(n);
    bfs_distances(universe, new_laureate, Dir::up, up_from_l);
    // Leg 2: distance from each node down to the nearest existing node.
    std::vector<std::uint32_t> down_to_existing = multi_source_distances(universe, existing, Dir::up);

    NodeIndex best = kInvalidNode;
    std::uint64_t best_total = 0;
    for (NodeIndex i = 0; i < n; ++i) {
        if (up_from_l[i] == kUnreachable || down_to_existing[i] == kUnreachable) continue;
        std::uint64_t total = std::uint64_t{up_from_l[i]} + down_to_existing[i];
        if (best == kInvalidNode || total < best_total) {
            best = i;  // persons sorted by id, so the first minimum is the smallest id
            best_total = total;
        }
    }
    if (best == kInvalidNode) return std::nullopt;

    CommonAncestor result;
    result.ancestor_id = universe.person(best).id;
    result.distance = static_cast<int>(best_total);

    // All nodes on a minimal witness path, for either leg: v lies on a
    // shortest ancestor->laureate path iff d(a,v) + d(v,laureate) matches the
    // leg length, likewise for the path towards the existing set.
    std::vector<std::uint32_t> down_from_a(n);
    bfs_distances(universe, best, Dir::down, down_from_a);
    const std::uint32_t leg1 = up_from_l[best];
    const std::uint32_t leg2 = down_to_existing[best];
    std::set<NodeIndex> nodes;
    for (NodeIndex v = 0; v < n; ++v) {
        if (down_from_a[v] == kUnreachable) continue;
        if (up_from_l[v] != kUnreachable && down_from_a[v] + up_from_l[v] == leg1) nodes.insert(v);
        if (down_to_existing[v] != kUnreachable && down_from_a[v] + down_to_existing[v] == leg2)
            nodes.insert(v);
    }
    result.path_nodes.assign(nodes.begin(), nodes.end());
    return result;
}

namespace {

void upgrade_reason(std::map<std::string, IncludeReason>& reasons, const std::string& id,
                    IncludeReason r) {
    auto [it, inserted] = reasons.emplace(id, r);
    if (!inserted && static_cast<int>(r) < static_cast<int>(it->second)) it->second = r;
}

struct Accumulator {
    const GenealogyGraph& universe;
    std::vector<char> mask;
    std::vector<NodeIndex> nodes;  // unsorted
    std::map<std::string, IncludeReason> reasons;

    explicit Accumulator(const GenealogyGraph& u) : universe(u), mask(u.node_count(), 0) {}

    void include(NodeIndex i, IncludeReason r) {
        if (!mask[i]) {
            mask[i] = 1;
            nodes.push_back(i);
        }
        upgrade_reason(reasons, universe.person(i).id, r);
    }

    /// Adds one person with the bounded closure rule; connects through the
    /// closest common ancestor when the closure misses the accumulated set.
    void add_with_closure(NodeIndex subject, IncludeReason subject_reason) {
        std::vector<NodeIndex> closure = ancestor_closure(universe, subject, kGenerationDepth);
        bool disjoint = !nodes.empty() &&
                        std::none_of(closure.begin(), closure.end(),
                                     [&](NodeIndex i) { return mask[i]; });
        if (disjoint) {
            if (auto cca = closest_common_ancestor(universe, subject, nodes))
                for (NodeIndex v : cca->path_nodes) include(v, IncludeReason::connector);
        }
        for (NodeIndex v : closure)
            if (v != subject) include(v, IncludeReason::ancestor);
        // The subject's own label (laureate/candidate) beats derived labels,
        // except that an earlier laureate label is never demoted.
        include(subject, subject_reason);
        auto it = reasons.find(universe.person(subject).id);
        if (it->second != IncludeReason::laureate) it->second = subject_reason;
    }

    Snapshot finish(int year) const {
        return Snapshot(year, universe.induced(nodes), reasons);
    }
};

void seed_from_snapshot(Accumulator& acc, const GenealogyGraph& universe, const Snapshot& prev) {
    for (const auto& [id, reason] : prev.included_reason()) acc.include(universe.require(id), reason);
}

void add_cohort(Accumulator& acc, const GenealogyGraph& universe,
                const std::vector<std::string>& laureate_ids) {
    for (const std::string& id : laureate_ids) {
        NodeIndex i = universe.require(id);
        if (!universe.person(i).laureate)
            throw DatasetError({{"cohort-not-laureate", id, "cohort entry is not flagged as a laureate"}});
        acc.add_with_closure(i, IncludeReason::laureate);
    }
}

}  // namespace

Snapshot build_year(const GenealogyGraph& universe, const Cohorts& cohorts, int year,
                    const Snapshot* prev) {
    Accumulator acc(universe);
    if (prev) seed_from_snapshot(acc, universe, *prev);
    auto it = cohorts.years.find(year);
    if (it != cohorts.years.end()) add_cohort(acc, universe, it->second);
    return acc.finish(year);
}

NetworkSeries build_series(const GenealogyGraph& universe, const Cohorts& cohorts) {
    NetworkSeries series;
    const Snapshot* prev = nullptr;
    for (const auto& [year, _] : cohorts.years) {
        series.push_back(build_year(universe, cohorts, year, prev));
        prev = &series.back();
    }
    return series;
}

Snapshot build_snapshot(const GenealogyGraph& universe, const Cohorts& cohorts, int year) {
    Accumulator acc(universe);
    for (const auto& [y, ids] : cohorts.years) {
        if (y > year) break;
        add_cohort(acc, universe, ids);
    }
    return acc.finish(year);
}

Snapshot snapshot_of_graph(GenealogyGraph graph, int year) {
    std::map<std::string, IncludeReason> reasons;
    for (const Person& p : graph.persons()) {
        bool is_laureate = p.laureate && p.prize_year && *p.prize_year <= year;
        reasons.emplace(p.id, is_laureate ? IncludeReason::laureate : IncludeReason::ancestor);
    }
    return Snapshot(year, std::move(graph), std::move(reasons));
}

GenealogyGraph apply_overlay(const GenealogyGraph& graph, std::span<const OverlayEdit> edits) {
    Dataset ds = graph.to_dataset();
    for (std::size_t k = 0; k < edits.size(); ++k) {
        const OverlayEdit& edit = edits[k];
        const std::string where = "edit " + std::to_string(k + 1);
        switch (edit.action) {
            case OverlayEdit::Action::add_edge: {
                auto dup = std::find_if(ds.edges.begin(), ds.edges.end(), [&](const AdvisingEdge& e) {
                    return e.advisor_id == edit.edge.advisor_id &&
                           e.student_id == edit.edge.student_id && e.kind == edit.edge.kind;
                });
                if (dup != ds.edges.end())
                    throw DatasetError({{"overlay-duplicate-edge",
                                         edit.edge.advisor_id + " -> " + edit.edge.student_id,
                                         where + ": edge already present"}});
                ds.edges.push_back(edit.edge);
                break;
            }
            case OverlayEdit::Action::remove_edge: {
                auto hit = std::find_if(ds.edges.begin(), ds.edges.end(), [&](const AdvisingEdge& e) {
                    return e.advisor_id == edit.edge.advisor_id &&
                           e.student_id == edit.edge.student_id && e.kind == edit.edge.kind;
                });
                if (hit == ds.edges.end())
                    throw DatasetError({{"overlay-missing-edge",
                                         edit.edge.advisor_id + " -> " + edit.edge.student_id,
                                         where + ": no such edge to remove"}});
                ds.edges.erase(hit);
                break;
            }
            case OverlayEdit::Action::add_person: {
                if (std::any_of(ds.persons.begin(), ds.persons.end(),
                                [&](const Person& p) { return p.id == edit.person.id; }))
                    throw DatasetError({{"overlay-duplicate-person", edit.person.id,
                                         where + ": person already present"}});
                ds.persons.push_back(edit.person);
                break;
            }
        }
    }
    return GenealogyGraph::build(std::move(ds));  // rechecks acyclicity and endpoints
}

GenealogyGraph expand_full(const GenealogyGraph& universe,
                           std::span<const std::string> cutoff_roots) {
    std::vector<NodeIndex> laureates;
    for (NodeIndex i = 0; i < universe.node_count(); ++i)
        if (universe.person(i).laureate) laureates.push_back(i);

    std::vector<std::uint32_t> anc = multi_source_distances(universe, laureates, Dir::up);

    std::vector<char> excluded(universe.node_count(), 0);
    std::vector<std::uint32_t> dist(universe.node_count());
    for (const std::string& root : cutoff_roots) {
        bfs_distances(universe, universe.require(root), Dir::up, dist);
        for (NodeIndex i = 0; i < universe.node_count(); ++i)
            if (dist[i] != kUnreachable && dist[i] > 0) excluded[i] = 1;
    }

    std::vector<NodeIndex> keep;
    for (NodeIndex i = 0; i < universe.node_count(); ++i)
        if (anc[i] != kUnreachable && !excluded[i]) keep.push_back(i);
    return universe.induced(keep);
}

Snapshot attach_candidates(const GenealogyGraph& universe, const Snapshot& snapshot,
                           std::span<const std::string> candidate_ids) {
    Accumulator acc(universe);
    seed_from_snapshot(acc, universe, snapshot);
    for (const std::string& id : candidate_ids)
        acc.add_with_closure(universe.require(id), IncludeReason::candidate);
    return acc.finish(snapshot.year());
}

ValidationReport validate_cohorts(const Dataset& ds, const Cohorts& cohorts) {
    ValidationReport report;
    std::map<std::string_view, const Person*> by_id;
    for (const Person& p : ds.persons) by_id.emplace(p.id, &p);

    for (const auto& [year, ids] : cohorts.years) {
        for (const std::string& id : ids) {
            auto it = by_id.find(id);
            if (it == by_id.end()) {
                report.errors.push_back(
                    {"cohort-unknown-person", id,
                     "cohort " + std::to_string(year) + " names an id missing from the dataset"});
                continue;
            }
            const Person& p = *it->second;
            if (!p.laureate) {
                report.errors.push_back({"cohort-not-laureate", id,
                                         "cohort " + std::to_string(year) +
                                             " entry is not flagged as a laureate"});
            } else if (p.prize_year && *p.prize_year != year) {
                report.warnings.push_back({"cohort-year-mismatch", id,
                                           "prize_year " + std::to_string(*p.prize_year) +
                                               " disagrees with cohort " + std::to_string(year)});
            }
        }
    }
    return report;
}

}  // namespace nobelnet
