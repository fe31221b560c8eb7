#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nobelnet/construct.hpp"

namespace nobelnet {

/// Growth record between two consecutive snapshots. `total` is the graph
/// edit distance, which for a subgraph pair is exactly the insertion count.
struct EditDelta {
    int year = 0;
    std::size_t nodes_added = 0;
    std::size_t edges_added = 0;
    std::size_t total = 0;
    std::size_t components_before = 0;
    std::size_t components_after = 0;

    bool operator==(const EditDelta&) const = default;
};

/// Requires prev ⊆ next (same person ids, same edge triples, nothing
/// removed); throws DatasetError code not-a-subgraph otherwise, since the
/// set-difference fast path would be meaningless.
EditDelta edit_delta(const Snapshot& prev, const Snapshot& next);

/// One delta per consecutive pair, chronological. Needs length >= 2.
std::vector<EditDelta> edit_series(const NetworkSeries& series);

/// Weakly connected component: direction is ignored, the label is the
/// smallest person id the component contains.
struct Component {
    std::string label;
    std::vector<NodeIndex> members;  // ascending
};

/// Components ascending by label (equivalently by smallest node index).
std::vector<Component> components(const GenealogyGraph& g);
std::vector<Component> components(const Snapshot& snapshot);

/// Induced subgraph on every node reachable from `root_id` along
/// advisor->student edges, root included. Unknown roots throw.
GenealogyGraph descendant_subgraph(const GenealogyGraph& g, std::string_view root_id);
GenealogyGraph descendant_subgraph(const Snapshot& snapshot, std::string_view root_id);

}  // namespace nobelnet
