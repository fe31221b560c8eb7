#include "nobelnet/baseline.hpp"

#include <algorithm>
#include <cstdlib>

#include "nobelnet/rng.hpp"
#include <cmath>
#include <set>
#include <stdexcept>

namespace nobelnet {

std::string_view to_string(PathVariant v) {
    return v == PathVariant::minimum ? "minimum" : "average";
}

std::optional<PathVariant> path_variant_from_string(std::string_view s) {
    if (s == "minimum") return PathVariant::minimum;
    if (s == "average") return PathVariant::average;
    return std::nullopt;
}

std::string_view to_string(StrataKey k) {
    return k == StrataKey::degree_year ? "degree_year" : "degree_year_bucket";
}

std::optional<StrataKey> strata_key_from_string(std::string_view s) {
    if (s == "degree_year") return StrataKey::degree_year;
    if (s == "degree_year_bucket") return StrataKey::degree_year_bucket;
    return std::nullopt;
}

namespace {

constexpr int kBucketWindow = 5;

}  // namespace

PathHistogram pairwise_paths(const GenealogyGraph& g, std::span<const NodeIndex> node_set,
                             PathVariant variant, Exec exec) {
    PathHistogram h;
    h.variant = variant;
    const std::size_t k = node_set.size();
    h.pairs_considered = k * (k - 1) / 2;
    if (k < 2) return h;

    std::vector<std::uint32_t> dist = distances_to_targets(g, node_set, node_set, Dir::down, exec);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            std::uint32_t d1 = dist[i * k + j];
            std::uint32_t d2 = dist[j * k + i];
            bool f1 = d1 != kUnreachable;
            bool f2 = d2 != kUnreachable;
            if (!f1 && !f2) {
                ++h.unreachable;
                continue;
            }
            double len;
            if (variant == PathVariant::minimum) {
                len = f1 && f2 ? std::min(d1, d2) : (f1 ? d1 : d2);
            } else {
                len = f1 && f2 ? (static_cast<double>(d1) + d2) / 2.0 : (f1 ? d1 : d2);
            }
            ++h.counts[len];
        }
    }
    return h;
}

SampleResult stratified_sample(const GenealogyGraph& g, std::span<const NodeIndex> reference,
                               StrataKey key, std::uint64_t seed) {
    SampleResult result;
    SplitMix rng{seed};
    std::vector<char> excluded(g.node_count(), 0);  // reference nodes and earlier draws
    for (NodeIndex r : reference) excluded[r] = 1;

    std::vector<NodeIndex> pool;
    for (NodeIndex r : reference) {
        const std::optional<int>& ry = g.person(r).degree_year;
        if (!ry) {
            result.gaps.push_back(g.person(r).id);
            continue;
        }
        auto collect = [&](int window) {
            pool.clear();
            for (NodeIndex v = 0; v < g.node_count(); ++v) {
                if (excluded[v]) continue;
                const std::optional<int>& vy = g.person(v).degree_year;
                if (vy && std::abs(*vy - *ry) <= window) pool.push_back(v);
            }
        };
        collect(0);
        if (pool.empty() && key == StrataKey::degree_year_bucket) collect(kBucketWindow);
        if (pool.empty()) {
            result.gaps.push_back(g.person(r).id);
            continue;
        }
        NodeIndex pick = pool[rng.bounded(pool.size())];
        excluded[pick] = 1;
        result.sample.push_back(pick);
    }
    return result;
}

ConfidenceBand baseline_band(const GenealogyGraph& g, std::span<const NodeIndex> reference,
                             std::size_t trials, double level, std::uint64_t seed,
                             PathVariant variant, StrataKey key, Exec exec) {
    if (trials < 2) throw std::invalid_argument("baseline_band needs at least 2 trials");

    std::vector<PathHistogram> hists(trials);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long t = 0; t < static_cast<long long>(trials); ++t) {
            SampleResult s = stratified_sample(g, reference, key, subsequence_seed(seed, t));
            hists[t] = pairwise_paths(g, s.sample, variant, Exec::serial);
        }
    } else {
        for (std::size_t t = 0; t < trials; ++t) {
            SampleResult s = stratified_sample(g, reference, key, subsequence_seed(seed, t));
            hists[t] = pairwise_paths(g, s.sample, variant, Exec::serial);
        }
    }

    std::set<double> lengths;
    for (const PathHistogram& h : hists)
        for (const auto& [len, _] : h.counts) lengths.insert(len);

    // Order statistics with linear interpolation between adjacent values.
    auto quantile = [](const std::vector<double>& sorted, double p) {
        double pos = p * static_cast<double>(sorted.size() - 1);
        std::size_t lo = static_cast<std::size_t>(pos);
        if (lo + 1 >= sorted.size()) return sorted.back();
        double frac = pos - static_cast<double>(lo);
        return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
    };

    ConfidenceBand band;
    band.level = level;
    band.trials = trials;
    std::vector<double> values(trials);
    for (double len : lengths) {
        for (std::size_t t = 0; t < trials; ++t) {
            auto it = hists[t].counts.find(len);
            values[t] = it == hists[t].counts.end() ? 0.0 : static_cast<double>(it->second);
        }
        std::sort(values.begin(), values.end());
        double tail = (1.0 - level) / 2.0;
        band.bounds.emplace(len, ConfidenceBand::Bounds{quantile(values, tail),
                                                        quantile(values, 1.0 - tail)});
    }
    return band;
}

}  // namespace nobelnet
