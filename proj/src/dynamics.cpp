#include "nobelnet/dynamics.hpp"

#include <algorithm>
#include <tuple>

#include "nobelnet/kernels.hpp"

namespace nobelnet {

namespace {

auto edge_key(const AdvisingEdge& e) {
    return std::tie(e.advisor_id, e.student_id, e.kind);
}

}  // namespace

EditDelta edit_delta(const Snapshot& prev, const Snapshot& next) {
    const GenealogyGraph& a = prev.graph();
    const GenealogyGraph& b = next.graph();

    for (const Person& p : a.persons())
        if (!b.contains(p.id))
            throw DatasetError({{"not-a-subgraph", p.id,
                                 "node present in the earlier snapshot but missing later"}});

    // Both edge lists are in canonical (advisor, student, kind) order.
    std::size_t j = 0;
    for (const AdvisingEdge& e : a.edges()) {
        while (j < b.edges().size() && edge_key(b.edges()[j]) < edge_key(e)) ++j;
        if (j == b.edges().size() || edge_key(b.edges()[j]) != edge_key(e))
            throw DatasetError({{"not-a-subgraph",
                                 e.advisor_id + " -> " + e.student_id,
                                 "edge present in the earlier snapshot but missing later"}});
        ++j;
    }

    EditDelta d;
    d.year = next.year();
    d.nodes_added = b.node_count() - a.node_count();
    d.edges_added = b.edge_count() - a.edge_count();
    d.total = d.nodes_added + d.edges_added;
    d.components_before = components(a).size();
    d.components_after = components(b).size();
    return d;
}

std::vector<EditDelta> edit_series(const NetworkSeries& series) {
    std::vector<EditDelta> out;
    for (std::size_t i = 1; i < series.size(); ++i)
        out.push_back(edit_delta(series[i - 1], series[i]));
    return out;
}

std::vector<Component> components(const GenealogyGraph& g) {
    std::vector<Component> out;
    std::vector<char> seen(g.node_count(), 0);
    std::vector<NodeIndex> stack;
    for (NodeIndex i = 0; i < g.node_count(); ++i) {
        if (seen[i]) continue;
        Component comp;
        seen[i] = 1;
        stack.assign(1, i);
        while (!stack.empty()) {
            NodeIndex v = stack.back();
            stack.pop_back();
            comp.members.push_back(v);
            for (auto span : {g.students(v), g.advisors(v)})
                for (NodeIndex w : span)
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
        }
        std::sort(comp.members.begin(), comp.members.end());
        comp.label = g.person(comp.members.front()).id;  // smallest id: indices follow id order
        out.push_back(std::move(comp));
    }
    return out;  // discovery from ascending indices already orders labels
}

std::vector<Component> components(const Snapshot& snapshot) {
    return components(snapshot.graph());
}

GenealogyGraph descendant_subgraph(const GenealogyGraph& g, std::string_view root_id) {
    NodeIndex root = g.require(root_id);
    std::vector<std::uint32_t> dist(g.node_count());
    bfs_distances(g, root, Dir::down, dist);
    std::vector<NodeIndex> keep;
    for (NodeIndex i = 0; i < g.node_count(); ++i)
        if (dist[i] != kUnreachable) keep.push_back(i);
    return g.induced(keep);
}

GenealogyGraph descendant_subgraph(const Snapshot& snapshot, std::string_view root_id) {
    return descendant_subgraph(snapshot.graph(), root_id);
}

}  // namespace nobelnet
