#include "nobelnet/affiliation.hpp"

#include <algorithm>
#include <cmath>

#include "nobelnet/metrics.hpp"

namespace nobelnet {

std::string_view to_string(WeightScheme::Mode m) {
    return m == WeightScheme::Mode::halving ? "halving" : "centrality_weighted";
}

std::optional<WeightScheme::Mode> weight_mode_from_string(std::string_view s) {
    if (s == "halving") return WeightScheme::Mode::halving;
    if (s == "centrality_weighted") return WeightScheme::Mode::centrality_weighted;
    return std::nullopt;
}

namespace {

std::string institution_of(const Person& p, std::vector<std::string>& missing) {
    if (p.degree_institution && !p.degree_institution->empty()) return *p.degree_institution;
    missing.push_back(p.id);
    return std::string(kUnknownInstitution);
}

}  // namespace

InstitutionLedger institution_points(const Snapshot& snapshot, const WeightScheme& scheme,
                                     Exec exec) {
    const GenealogyGraph& g = snapshot.graph();
    InstitutionLedger ledger;
    ledger.year = snapshot.year();

    std::vector<double> centrality;  // arithmetic, by node; centrality mode only
    if (scheme.mode == WeightScheme::Mode::centrality_weighted)
        for (const CentralityRecord& rec : centrality_all(snapshot, exec))
            centrality.push_back(rec.arithmetic);

    std::vector<std::uint32_t> depth(g.node_count());
    for (NodeIndex laureate : snapshot.nobel_targets()) {
        ledger.points[institution_of(g.person(laureate), ledger.missing)] += 1.0;
        bfs_distances(g, laureate, Dir::up, depth);  // depth = minimal generation

        // Per-laureate scale so its generation-1 weights total the target;
        // all-zero generation-1 centralities fall back to halving.
        double scale = 0.0;
        bool use_centrality = false;
        if (scheme.mode == WeightScheme::Mode::centrality_weighted) {
            double gen1 = 0.0;
            for (NodeIndex a : g.advisors(laureate)) gen1 += centrality[a];
            if (gen1 > 0.0) {
                scale = scheme.generation_one_total / gen1;
                use_centrality = true;
            }
        }

        for (NodeIndex a = 0; a < g.node_count(); ++a) {
            if (a == laureate || depth[a] == kUnreachable) continue;
            double w = use_centrality ? centrality[a] * scale
                                      : std::ldexp(1.0, -static_cast<int>(depth[a]));
            if (w <= 0.0) continue;
            ledger.points[institution_of(g.person(a), ledger.missing)] += w;
        }
    }

    double total = 0.0;
    for (const auto& [_, pts] : ledger.points) total += pts;
    if (total > 0.0)
        for (const auto& [inst, pts] : ledger.points) ledger.shares[inst] = pts / total;

    std::sort(ledger.missing.begin(), ledger.missing.end());
    ledger.missing.erase(std::unique(ledger.missing.begin(), ledger.missing.end()),
                         ledger.missing.end());
    return ledger;
}

std::vector<ShareRow> share_series(const NetworkSeries& series, const WeightScheme& scheme,
                                   std::size_t top_k, Exec exec) {
    std::vector<ShareRow> rows;
    if (series.empty()) return rows;

    std::vector<InstitutionLedger> ledgers;
    ledgers.reserve(series.size());
    for (const Snapshot& snapshot : series)
        ledgers.push_back(institution_points(snapshot, scheme, exec));

    // Point totals only grow over the series, so the final year names every
    // institution that ever scored.
    std::vector<std::pair<std::string, double>> final_shares(ledgers.back().shares.begin(),
                                                             ledgers.back().shares.end());
    std::sort(final_shares.begin(), final_shares.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    std::vector<std::string> leaders;
    for (std::size_t i = 0; i < final_shares.size() && i < top_k; ++i)
        leaders.push_back(final_shares[i].first);
    bool has_rest = final_shares.size() > leaders.size();

    for (const InstitutionLedger& ledger : ledgers) {
        double rest_points = 0.0;
        double rest_share = 0.0;
        for (const auto& [inst, pts] : ledger.points) {
            if (std::find(leaders.begin(), leaders.end(), inst) != leaders.end()) continue;
            rest_points += pts;
            auto sh = ledger.shares.find(inst);
            if (sh != ledger.shares.end()) rest_share += sh->second;
        }
        for (const std::string& inst : leaders) {
            auto pts = ledger.points.find(inst);
            auto sh = ledger.shares.find(inst);
            rows.push_back({ledger.year, inst,
                            pts == ledger.points.end() ? 0.0 : pts->second,
                            sh == ledger.shares.end() ? 0.0 : sh->second});
        }
        if (has_rest) rows.push_back({ledger.year, "rest", rest_points, rest_share});
    }
    return rows;
}

}  // namespace nobelnet
