#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nobelnet/construct.hpp"
#include "nobelnet/kernels.hpp"

namespace nobelnet {

/// Bucket for credit that cannot be attributed to a named institution
/// (person has no recorded degree institution).
inline constexpr std::string_view kUnknownInstitution = "(unknown)";

/// How ancestor generations are weighted. halving: weight(g) = 2^-g.
/// centrality_weighted: an ancestor's weight is proportional to its
/// arithmetic centrality, scaled per laureate so the generation-1 weights
/// sum to `generation_one_total`; laureates whose generation-1 centralities
/// are all zero fall back to halving.
struct WeightScheme {
    enum class Mode { halving, centrality_weighted };

    Mode mode = Mode::halving;
    double generation_one_total = 0.5;
};

std::string_view to_string(WeightScheme::Mode m);
std::optional<WeightScheme::Mode> weight_mode_from_string(std::string_view s);

/// One year's institution scores. `missing` lists persons whose credit went
/// to the unknown bucket. Shares sum to 1 whenever any points were awarded.
struct InstitutionLedger {
    int year = 0;
    std::map<std::string, double> points;
    std::map<std::string, double> shares;
    std::vector<std::string> missing;
};

/// Each laureate grants its own institution one point and every ancestor's
/// institution weight(g) at the ancestor's minimal generation g >= 1.
InstitutionLedger institution_points(const Snapshot& snapshot, const WeightScheme& scheme,
                                     Exec exec = Exec::parallel);

/// Tidy per-year rows for the k institutions leading in the final year;
/// everything else aggregates under "rest" (omitted when nothing is left).
struct ShareRow {
    int year = 0;
    std::string institution;
    double points = 0.0;
    double share = 0.0;
};

std::vector<ShareRow> share_series(const NetworkSeries& series, const WeightScheme& scheme,
                                   std::size_t top_k, Exec exec = Exec::parallel);

}  // namespace nobelnet
