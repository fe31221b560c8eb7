// Serial vs. OpenMP comparison for the BFS batch kernels on synthetic DAGs.
// Prints one line per (nodes, kernel) pair with wall times and speedup.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nobelnet/construct.hpp"
#include "nobelnet/kernels.hpp"
#include "nobelnet/metrics.hpp"
#include "nobelnet/synthetic.hpp"

namespace nn = nobelnet;

namespace {

double seconds(const std::function<void()>& fn, int reps) {
    using clock = std::chrono::steady_clock;
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = clock::now();
        fn();
        auto t1 = clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

volatile std::uint64_t sink;  // keeps results alive

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::size_t> sizes = {2000, 8000, 20000};
    int reps = 3;
    if (argc > 1) {
        try {
            sizes = {static_cast<std::size_t>(std::stoull(argv[1]))};
            if (argc > 2) reps = std::stoi(argv[2]);
        } catch (const std::exception&) {
            std::fprintf(stderr, "usage: %s [nodes [reps]]\n", argv[0]);
            return 2;
        }
    }

#ifdef _OPENMP
    std::printf("# OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("# OpenMP disabled; parallel paths run serially\n");
#endif
    std::printf("%-8s %-22s %12s %12s %9s\n", "nodes", "kernel", "serial_s", "parallel_s",
                "speedup");

    for (std::size_t n : sizes) {
        nn::SyntheticSpec spec;
        spec.seed = 9000 + n;
        spec.nodes = n;
        spec.max_advisors = 3;
        spec.laureate_fraction = 0.25;
        nn::GenealogyGraph g = nn::synthetic_dag(spec);
        nn::Snapshot snapshot = nn::snapshot_of_graph(g, spec.last_prize_year);

        std::vector<nn::NodeIndex> sources(g.node_count());
        for (nn::NodeIndex i = 0; i < g.node_count(); ++i) sources[i] = i;
        std::span<const nn::NodeIndex> targets = snapshot.nobel_targets();

        auto run_targets = [&](nn::Exec exec) {
            auto d = nn::distances_to_targets(g, sources, targets, nn::Dir::down, exec);
            sink = d.empty() ? 0 : d.front();
        };
        double ts = seconds([&] { run_targets(nn::Exec::serial); }, reps);
        double tp = seconds([&] { run_targets(nn::Exec::parallel); }, reps);
        std::printf("%-8zu %-22s %12.4f %12.4f %8.2fx\n", n, "distances_to_targets", ts, tp,
                    ts / tp);

        auto run_centrality = [&](nn::Exec exec) {
            auto rec = nn::centrality_all(snapshot, exec);
            sink = rec.size();
        };
        ts = seconds([&] { run_centrality(nn::Exec::serial); }, reps);
        tp = seconds([&] { run_centrality(nn::Exec::parallel); }, reps);
        std::printf("%-8zu %-22s %12.4f %12.4f %8.2fx\n", n, "centrality_all", ts, tp, ts / tp);
    }
    return 0;
}
