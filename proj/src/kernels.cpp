#include "nobelnet/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nobelnet {

namespace {

std::span<const NodeIndex> neighbors(const GenealogyGraph& g, NodeIndex v, Dir dir) {
    return dir == Dir::down ? g.students(v) : g.advisors(v);
}

// BFS over the dense index space with caller-owned scratch. `queue` must hold
// node_count entries. Returns the number of targets hit when `remaining` is
// given (early exit once it reaches zero).
void bfs_into(const GenealogyGraph& g, NodeIndex source, Dir dir, std::span<std::uint32_t> dist,
              std::vector<NodeIndex>& queue, const std::vector<char>* is_target = nullptr,
              std::size_t remaining = 0) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    dist[source] = 0;
    queue.clear();
    queue.push_back(source);
    if (is_target && (*is_target)[source] && remaining > 0) --remaining;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        NodeIndex v = queue[head];
        const std::uint32_t next = dist[v] + 1;
        for (NodeIndex w : neighbors(g, v, dir)) {
            if (dist[w] != kUnreachable) continue;
            dist[w] = next;
            queue.push_back(w);
            if (is_target && (*is_target)[w]) {
                if (--remaining == 0) return;
            }
        }
    }
}

}  // namespace

void bfs_distances(const GenealogyGraph& g, NodeIndex source, Dir dir,
                   std::span<std::uint32_t> out) {
    std::vector<NodeIndex> queue;
    queue.reserve(g.node_count());
    bfs_into(g, source, dir, out, queue);
}

std::vector<std::uint32_t> batch_distances(const GenealogyGraph& g,
                                           std::span<const NodeIndex> sources, Dir dir,
                                           Exec exec) {
    const std::size_t n = g.node_count();
    std::vector<std::uint32_t> rows(sources.size() * n, kUnreachable);
    if (n == 0) return rows;

    const auto run = [&](std::size_t s) {
        std::vector<NodeIndex> queue;
        queue.reserve(n);
        bfs_into(g, sources[s], dir, {rows.data() + s * n, n}, queue);
    };

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (std::int64_t s = 0; s < static_cast<std::int64_t>(sources.size()); ++s) run(s);
    } else {
        for (std::size_t s = 0; s < sources.size(); ++s) run(s);
    }
    return rows;
}

std::vector<std::uint32_t> distances_to_targets(const GenealogyGraph& g,
                                                std::span<const NodeIndex> sources,
                                                std::span<const NodeIndex> targets, Dir dir,
                                                Exec exec) {
    const std::size_t n = g.node_count();
    const std::size_t t = targets.size();
    std::vector<std::uint32_t> out(sources.size() * t, kUnreachable);
    if (n == 0 || t == 0) return out;

    std::vector<char> is_target(n, 0);
    for (NodeIndex v : targets) is_target[v] = 1;

    const auto run = [&](std::size_t s, std::vector<std::uint32_t>& dist,
                         std::vector<NodeIndex>& queue) {
        bfs_into(g, sources[s], dir, dist, queue, &is_target, t);
        for (std::size_t j = 0; j < t; ++j) out[s * t + j] = dist[targets[j]];
    };

    if (exec == Exec::parallel) {
#pragma omp parallel
        {
            std::vector<std::uint32_t> dist(n);
            std::vector<NodeIndex> queue;
            queue.reserve(n);
#pragma omp for schedule(dynamic, 8)
            for (std::int64_t s = 0; s < static_cast<std::int64_t>(sources.size()); ++s)
                run(s, dist, queue);
        }
    } else {
        std::vector<std::uint32_t> dist(n);
        std::vector<NodeIndex> queue;
        queue.reserve(n);
        for (std::size_t s = 0; s < sources.size(); ++s) run(s, dist, queue);
    }
    return out;
}

std::vector<std::uint32_t> distances_to_targets_serial(const GenealogyGraph& g,
                                                       std::span<const NodeIndex> sources,
                                                       std::span<const NodeIndex> targets,
                                                       Dir dir) {
    const std::size_t n = g.node_count();
    std::vector<std::uint32_t> out(sources.size() * targets.size(), kUnreachable);
    std::vector<std::uint32_t> dist(n);
    for (std::size_t s = 0; s < sources.size(); ++s) {
        bfs_distances(g, sources[s], dir, dist);
        for (std::size_t j = 0; j < targets.size(); ++j)
            out[s * targets.size() + j] = dist[targets[j]];
    }
    return out;
}

std::vector<std::uint32_t> multi_source_distances(const GenealogyGraph& g,
                                                  std::span<const NodeIndex> sources, Dir dir) {
    const std::size_t n = g.node_count();
    std::vector<std::uint32_t> dist(n, kUnreachable);
    std::vector<NodeIndex> queue;
    queue.reserve(n);
    for (NodeIndex s : sources) {
        if (dist[s] == 0) continue;
        dist[s] = 0;
        queue.push_back(s);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        NodeIndex v = queue[head];
        const std::uint32_t next = dist[v] + 1;
        for (NodeIndex w : neighbors(g, v, dir)) {
            if (dist[w] != kUnreachable) continue;
            dist[w] = next;
            queue.push_back(w);
        }
    }
    return dist;
}

}  // namespace nobelnet
