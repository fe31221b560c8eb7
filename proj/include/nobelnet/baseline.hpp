#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nobelnet/core.hpp"
#include "nobelnet/kernels.hpp"

namespace nobelnet {

/// Aggregation per unordered node pair: `minimum` keeps the shorter of the
/// two directed distances, `average` their mean (or the finite one).
enum class PathVariant { minimum, average };
std::string_view to_string(PathVariant v);
std::optional<PathVariant> path_variant_from_string(std::string_view s);

/// Shortest-path length distribution over all unordered pairs of a node set.
/// counts keys are lengths (half-integers possible in the average variant);
/// Σ counts + unreachable = pairs_considered = C(|set|, 2).
struct PathHistogram {
    PathVariant variant = PathVariant::minimum;
    std::map<double, std::size_t> counts;
    std::size_t unreachable = 0;
    std::size_t pairs_considered = 0;
};

PathHistogram pairwise_paths(const GenealogyGraph& g, std::span<const NodeIndex> node_set,
                             PathVariant variant = PathVariant::minimum,
                             Exec exec = Exec::parallel);

/// degree_year matches strata exactly; degree_year_bucket falls back to a
/// ±5-year window around the reference node's degree year when the exact
/// stratum has no available member.
enum class StrataKey { degree_year, degree_year_bucket };
std::string_view to_string(StrataKey k);
std::optional<StrataKey> strata_key_from_string(std::string_view s);

/// One stratum-matched draw per reference node, without replacement within
/// the trial. `gaps` lists reference ids whose stratum had no available
/// member (including reference nodes lacking a degree year); each gap
/// shrinks the sample by one.
struct SampleResult {
    std::vector<NodeIndex> sample;
    std::vector<std::string> gaps;
};

SampleResult stratified_sample(const GenealogyGraph& g, std::span<const NodeIndex> reference,
                               StrataKey key, std::uint64_t seed);

/// Empirical per-length quantile band over seeded Monte Carlo trials.
struct ConfidenceBand {
    struct Bounds {
        double lower = 0.0;
        double upper = 0.0;
    };

    double level = 0.90;
    std::size_t trials = 0;
    std::map<double, Bounds> bounds;
};

/// Runs pairwise_paths over `trials` stratified samples and keeps, per path
/// length, the empirical quantiles at (1-level)/2 and 1-(1-level)/2
/// (order statistics with linear interpolation). Trial sub-seeds derive
/// from `seed`, so results are reproducible regardless of thread count.
ConfidenceBand baseline_band(const GenealogyGraph& g, std::span<const NodeIndex> reference,
                             std::size_t trials, double level, std::uint64_t seed,
                             PathVariant variant = PathVariant::minimum,
                             StrataKey key = StrataKey::degree_year_bucket,
                             Exec exec = Exec::parallel);

}  // namespace nobelnet
