#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nobelnet/core.hpp"

namespace nobelnet {

/// Execution policy for the batch kernels. `parallel` distributes independent
/// per-source traversals over OpenMP threads; results are identical to
/// `serial` because sources never share state.
enum class Exec { serial, parallel };

/// Traversal direction: `down` follows advisor -> student edges (descendants),
/// `up` follows them in reverse (ancestors).
enum class Dir { down, up };

inline constexpr std::uint32_t kUnreachable = static_cast<std::uint32_t>(-1);

/// Single-source BFS. `out` must have graph.node_count() entries; unreachable
/// nodes are left at kUnreachable, the source itself at 0.
void bfs_distances(const GenealogyGraph& g, NodeIndex source, Dir dir,
                   std::span<std::uint32_t> out);

/// Full distance rows for each source, |sources| x node_count, row-major.
std::vector<std::uint32_t> batch_distances(const GenealogyGraph& g,
                                           std::span<const NodeIndex> sources, Dir dir,
                                           Exec exec = Exec::parallel);

/// Distances from each source to the listed targets only,
/// |sources| x |targets| row-major. The traversal stops early once every
/// target has been reached. This is the hot kernel behind the centrality and
/// resampling passes.
std::vector<std::uint32_t> distances_to_targets(const GenealogyGraph& g,
                                                std::span<const NodeIndex> sources,
                                                std::span<const NodeIndex> targets, Dir dir,
                                                Exec exec = Exec::parallel);

/// Plain reference version of distances_to_targets: one unoptimized BFS per
/// source, no early exit, no threading. Kept for equivalence tests and the
/// benchmark baseline.
std::vector<std::uint32_t> distances_to_targets_serial(const GenealogyGraph& g,
                                                       std::span<const NodeIndex> sources,
                                                       std::span<const NodeIndex> targets,
                                                       Dir dir);

/// Multi-source BFS: distance from the nearest of `sources` to every node.
std::vector<std::uint32_t> multi_source_distances(const GenealogyGraph& g,
                                                  std::span<const NodeIndex> sources, Dir dir);

}  // namespace nobelnet
