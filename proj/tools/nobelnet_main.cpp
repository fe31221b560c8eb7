#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nobelnet/affiliation.hpp"
#include "nobelnet/baseline.hpp"
#include "nobelnet/construct.hpp"
#include "nobelnet/core.hpp"
#include "nobelnet/csv.hpp"
#include "nobelnet/dynamics.hpp"
#include "nobelnet/exporters.hpp"
#include "nobelnet/harvest.hpp"
#include "nobelnet/io.hpp"
#include "nobelnet/metrics.hpp"

namespace nn = nobelnet;
namespace fs = std::filesystem;

namespace {

constexpr int kExitData = 1;   // validation / data errors
constexpr int kExitUsage = 2;  // flag and configuration errors

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

struct CommonOpts {
    std::string data_dir = ".";
    std::string nodes_path;
    std::string edges_path;
    std::string cohorts_path;
    std::string overlay_path;
    std::string out = "-";
    bool serial = false;

    nn::Exec exec() const { return serial ? nn::Exec::serial : nn::Exec::parallel; }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_output = true) {
    cmd->add_option("--data-dir", o.data_dir,
                    "Directory holding nodes.csv, edges.csv, cohorts.csv")
        ->envname("NOBELNET_DATA_DIR")
        ->capture_default_str();
    cmd->add_option("--nodes", o.nodes_path, "Node CSV (overrides --data-dir)");
    cmd->add_option("--edges", o.edges_path, "Edge CSV (overrides --data-dir)");
    cmd->add_option("--cohorts", o.cohorts_path, "Cohort CSV (overrides --data-dir)");
    cmd->add_option("--overlay", o.overlay_path, "Edit overlay CSV applied to the universe");
    if (with_output)
        cmd->add_option("-o,--out", o.out, "Output file, '-' for stdout")->capture_default_str();
    cmd->add_flag("--serial", o.serial, "Run kernels single-threaded");
}

fs::path pick(const std::string& explicit_path, const std::string& dir, const char* name) {
    return explicit_path.empty() ? fs::path(dir) / name : fs::path(explicit_path);
}

nn::Dataset load_raw(const CommonOpts& o) {
    return nn::io::load_dataset(pick(o.nodes_path, o.data_dir, "nodes.csv"),
                                pick(o.edges_path, o.data_dir, "edges.csv"));
}

struct Bundle {
    nn::GenealogyGraph universe;
    nn::Cohorts cohorts;
};

Bundle load_bundle(const CommonOpts& o, bool need_cohorts) {
    Bundle b;
    b.universe = nn::GenealogyGraph::build(load_raw(o));
    if (!o.overlay_path.empty())
        b.universe = nn::apply_overlay(b.universe, nn::io::load_overlay(o.overlay_path));
    fs::path cohorts = pick(o.cohorts_path, o.data_dir, "cohorts.csv");
    if (need_cohorts || fs::exists(cohorts)) b.cohorts = nn::io::load_cohorts(cohorts);
    return b;
}

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default analysis year is the last cohort year; explicit years must lie
/// inside cohort coverage.
int resolve_year(const Bundle& b, std::optional<int> requested) {
    if (b.cohorts.empty()) {
        if (requested) return *requested;
        throw UsageError("no cohorts available; pass --year explicitly");
    }
    if (!requested) return b.cohorts.last_year();
    if (*requested < b.cohorts.first_year() || *requested > b.cohorts.last_year())
        throw UsageError("--year " + std::to_string(*requested) + " outside cohort coverage [" +
                         std::to_string(b.cohorts.first_year()) + ", " +
                         std::to_string(b.cohorts.last_year()) + "]");
    return *requested;
}

int write_output(const std::string& out, const std::function<void(std::ostream&)>& body) {
    if (out == "-") {
        body(std::cout);
        std::cout.flush();
        return std::cout ? 0 : kExitData;
    }
    if (fs::path(out).has_parent_path()) fs::create_directories(fs::path(out).parent_path());
    std::ofstream os(out, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file " + out);
    body(os);
    os.flush();
    if (!os) throw std::runtime_error("write failed for " + out);
    return 0;
}

void write_fields(std::ostream& os, std::initializer_list<std::string> fields) {
    std::vector<std::string> row(fields);
    nn::csv::write_row(os, row);
}

// ---------------------------------------------------------------- validate

struct ValidateOpts {
    CommonOpts common;
};

int cmd_validate(const ValidateOpts& o) {
    nn::Dataset ds = load_raw(o.common);
    nn::ValidationReport report = nn::validate(ds);

    fs::path cohorts_path = pick(o.common.cohorts_path, o.common.data_dir, "cohorts.csv");
    if (fs::exists(cohorts_path)) {
        nn::Cohorts cohorts = nn::io::load_cohorts(cohorts_path);
        nn::ValidationReport cohort_report = nn::validate_cohorts(ds, cohorts);
        report.errors.insert(report.errors.end(), cohort_report.errors.begin(),
                             cohort_report.errors.end());
        report.warnings.insert(report.warnings.end(), cohort_report.warnings.begin(),
                               cohort_report.warnings.end());
    }

    int rc = write_output(o.common.out, [&](std::ostream& os) {
        for (const nn::Finding& f : report.errors)
            os << "error " << f.code << " [" << f.subject << "]: " << f.message << "\n";
        for (const nn::Finding& f : report.warnings)
            os << "warning " << f.code << " [" << f.subject << "]: " << f.message << "\n";
        os << report.errors.size() << " errors, " << report.warnings.size() << " warnings\n";
    });
    if (rc != 0) return rc;
    return report.admissible() ? 0 : kExitData;
}

// ------------------------------------------------------------------- build

struct BuildOpts {
    CommonOpts common;
    std::optional<int> year;
    bool full = false;
    std::vector<std::string> cutoff;
    std::string save_dir;
};

void summary_row(std::ostream& os, int year, const nn::GenealogyGraph& g) {
    std::size_t laureates = 0;
    for (const nn::Person& p : g.persons())
        if (p.laureate) ++laureates;
    write_fields(os, {std::to_string(year), std::to_string(g.node_count()),
                      std::to_string(g.edge_count()), std::to_string(laureates),
                      std::to_string(nn::components(g).size())});
}

int cmd_build(const BuildOpts& o) {
    Bundle b = load_bundle(o.common, !o.full);

    if (o.full) {
        nn::GenealogyGraph full = nn::expand_full(b.universe, o.cutoff);
        if (!o.save_dir.empty()) nn::io::save_dataset_dir(full.to_dataset(), o.save_dir);
        int year = b.cohorts.empty() ? 0 : b.cohorts.last_year();
        return write_output(o.common.out, [&](std::ostream& os) {
            write_fields(os, {"year", "nodes", "edges", "laureates", "components"});
            summary_row(os, year, full);
        });
    }

    int last = resolve_year(b, o.year);
    nn::NetworkSeries series = nn::build_series(b.universe, b.cohorts);
    if (!o.save_dir.empty()) {
        for (const nn::Snapshot& s : series)
            if (s.year() == last)
                nn::io::save_dataset_dir(s.graph().to_dataset(), o.save_dir);
    }
    return write_output(o.common.out, [&](std::ostream& os) {
        write_fields(os, {"year", "nodes", "edges", "laureates", "components"});
        for (const nn::Snapshot& s : series) {
            if (s.year() > last) break;
            summary_row(os, s.year(), s.graph());
        }
    });
}

// -------------------------------------------------------------- centrality

struct CentralityOpts {
    CommonOpts common;
    std::optional<int> year;
    nn::Measure measure = nn::Measure::harmonic;
    bool history = false;
    std::vector<std::string> subjects;
    std::size_t top = 0;
};

int cmd_centrality(const CentralityOpts& o) {
    Bundle b = load_bundle(o.common, true);
    int year = resolve_year(b, o.year);

    return write_output(o.common.out, [&](std::ostream& os) {
        write_fields(os, {"year", "node_id", "name", "measure", "score", "rank"});
        auto name_of = [&](const std::string& id) {
            auto i = b.universe.find(id);
            return i ? b.universe.person(*i).name : std::string();
        };

        if (o.history) {
            nn::NetworkSeries series = nn::build_series(b.universe, b.cohorts);
            while (!series.empty() && series.back().year() > year) series.pop_back();
            std::vector<std::string> subjects = o.subjects;
            if (subjects.empty())
                for (const nn::Person& p : b.universe.persons()) subjects.push_back(p.id);
            for (const nn::RankHistoryRow& row :
                 nn::rank_history(series, o.measure, subjects, o.common.exec()))
                write_fields(os, {std::to_string(row.year), row.id, name_of(row.id),
                                  std::string(nn::to_string(o.measure)), fmt(row.score),
                                  std::to_string(row.rank)});
            return;
        }

        nn::Snapshot snapshot = nn::build_snapshot(b.universe, b.cohorts, year);
        nn::RankTable table = nn::rank_table(snapshot, o.measure, o.common.exec());
        std::size_t emitted = 0;
        for (const nn::RankTable::Row& row : table.rows) {
            if (!o.subjects.empty() &&
                std::find(o.subjects.begin(), o.subjects.end(), row.id) == o.subjects.end())
                continue;
            if (o.top > 0 && emitted >= o.top) break;
            write_fields(os, {std::to_string(year), row.id, name_of(row.id),
                              std::string(nn::to_string(o.measure)), fmt(row.score),
                              std::to_string(row.rank)});
            ++emitted;
        }
    });
}

// ---------------------------------------------------------------- timeline

struct TimelineOpts {
    CommonOpts common;
};

int cmd_timeline(const TimelineOpts& o) {
    Bundle b = load_bundle(o.common, true);
    nn::NetworkSeries series = nn::build_series(b.universe, b.cohorts);
    std::vector<nn::EditDelta> deltas =
        series.size() < 2 ? std::vector<nn::EditDelta>{} : nn::edit_series(series);
    return write_output(o.common.out, [&](std::ostream& os) {
        write_fields(os, {"year", "nodes_added", "edges_added", "total", "components"});
        for (const nn::EditDelta& d : deltas)
            write_fields(os, {std::to_string(d.year), std::to_string(d.nodes_added),
                              std::to_string(d.edges_added), std::to_string(d.total),
                              std::to_string(d.components_after)});
    });
}

// ------------------------------------------------------------ universities

struct UniversitiesOpts {
    CommonOpts common;
    nn::WeightScheme scheme;
    std::size_t top_k = 10;
    std::optional<int> year;
};

int cmd_universities(const UniversitiesOpts& o) {
    Bundle b = load_bundle(o.common, true);
    int last = resolve_year(b, o.year);
    nn::NetworkSeries series = nn::build_series(b.universe, b.cohorts);
    while (!series.empty() && series.back().year() > last) series.pop_back();
    std::vector<nn::ShareRow> rows =
        nn::share_series(series, o.scheme, o.top_k, o.common.exec());
    return write_output(o.common.out, [&](std::ostream& os) {
        write_fields(os, {"year", "institution", "points", "share"});
        for (const nn::ShareRow& r : rows)
            write_fields(os,
                         {std::to_string(r.year), r.institution, fmt(r.points), fmt(r.share)});
    });
}

// ---------------------------------------------------------------- subgraph

struct SubgraphOpts {
    CommonOpts common;
    std::string root;
    std::optional<int> year;
    std::string format = "dot";
    bool highlight = true;
};

int cmd_subgraph(const SubgraphOpts& o) {
    Bundle b = load_bundle(o.common, true);
    int year = resolve_year(b, o.year);
    nn::Snapshot snapshot = nn::build_snapshot(b.universe, b.cohorts, year);
    nn::GenealogyGraph sub = nn::descendant_subgraph(snapshot, o.root);

    std::string text;
    if (o.format == "dot") {
        std::vector<std::string> highlight;
        if (o.highlight)
            for (const nn::Person& p : sub.persons())
                if (p.laureate && p.prize_year && *p.prize_year <= year)
                    highlight.push_back(p.id);
        text = nn::export_dot(sub, highlight);
    } else {
        text = nn::export_graphml(sub);
    }
    return write_output(o.common.out, [&](std::ostream& os) { os << text; });
}

// -------------------------------------------------------------- candidates

struct CandidatesOpts {
    CommonOpts common;
    std::vector<std::string> ids;
    bool all_flagged = false;
    std::optional<int> year;
    std::string mode = "both";
    std::string counterfactual_out;
};

int cmd_candidates(const CandidatesOpts& o) {
    Bundle b = load_bundle(o.common, true);
    int year = resolve_year(b, o.year);

    std::vector<std::string> ids = o.ids;
    if (o.all_flagged)
        for (const nn::Person& p : b.universe.persons())
            if (p.candidate &&
                std::find(ids.begin(), ids.end(), p.id) == ids.end())
                ids.push_back(p.id);
    if (ids.empty()) throw UsageError("no candidates given; use --ids or --all-flagged");

    nn::Snapshot snapshot = nn::build_snapshot(b.universe, b.cohorts, year);
    nn::Snapshot augmented = nn::attach_candidates(b.universe, snapshot, ids);

    std::vector<nn::TargetMode> modes;
    if (o.mode == "network" || o.mode == "both") modes.push_back(nn::TargetMode::network);
    if (o.mode == "laureates" || o.mode == "both") modes.push_back(nn::TargetMode::laureates);

    int rc = write_output(o.common.out, [&](std::ostream& os) {
        write_fields(os, {"year", "node_id", "name", "mode", "score"});
        for (const std::string& id : ids) {
            const nn::Person& p = b.universe.person(b.universe.require(id));
            for (nn::TargetMode mode : modes)
                write_fields(os, {std::to_string(year), id, p.name,
                                  std::string(nn::to_string(mode)),
                                  fmt(nn::incloseness(augmented, id, mode))});
        }
    });
    if (rc != 0 || o.counterfactual_out.empty()) return rc;

    nn::RankTable before = nn::rank_table(snapshot, nn::Measure::harmonic, o.common.exec());
    std::map<std::string, int> delta =
        nn::counterfactual_rank_delta(b.universe, snapshot, ids, o.common.exec());
    return write_output(o.counterfactual_out, [&](std::ostream& os) {
        write_fields(os, {"node_id", "rank_before", "rank_after", "delta"});
        for (const nn::RankTable::Row& row : before.rows) {
            int d = delta.at(row.id);
            write_fields(os, {row.id, std::to_string(row.rank), std::to_string(row.rank + d),
                              std::to_string(d)});
        }
    });
}

// ---------------------------------------------------------------- baseline

struct BaselineOpts {
    CommonOpts common;
    std::optional<int> year;
    std::size_t trials = 50;
    double level = 0.9;
    std::uint64_t seed = 20210101;
    std::string variant = "minimum";
    std::string strata = "degree_year_bucket";
    std::string hist_out = "baseline_histogram.csv";
    std::string band_out = "baseline_band.csv";
};

int cmd_baseline(const BaselineOpts& o) {
    Bundle b = load_bundle(o.common, true);
    int year = resolve_year(b, o.year);
    nn::Snapshot snapshot = nn::build_snapshot(b.universe, b.cohorts, year);

    nn::PathVariant variant = *nn::path_variant_from_string(o.variant);
    nn::StrataKey strata = *nn::strata_key_from_string(o.strata);

    nn::PathHistogram hist = nn::pairwise_paths(snapshot.graph(), snapshot.nobel_targets(),
                                                variant, o.common.exec());
    nn::ConfidenceBand band =
        nn::baseline_band(snapshot.graph(), snapshot.nobel_targets(), o.trials, o.level, o.seed,
                          variant, strata, o.common.exec());

    int rc = write_output(o.hist_out, [&](std::ostream& os) {
        write_fields(os, {"length", "count"});
        for (const auto& [len, count] : hist.counts)
            write_fields(os, {fmt(len), std::to_string(count)});
    });
    if (rc != 0) return rc;
    return write_output(o.band_out, [&](std::ostream& os) {
        write_fields(os, {"length", "lower", "upper"});
        for (const auto& [len, bounds] : band.bounds)
            write_fields(os, {fmt(len), fmt(bounds.lower), fmt(bounds.upper)});
    });
}

// ------------------------------------------------------------------- fetch

struct FetchOpts {
    CommonOpts common;
    std::string source = "academic_tree";
    std::string base_url;
    std::string cache_dir = "cache";
    std::vector<std::string> ids;
    int depth = 5;
    unsigned interval_ms = 1000;
    bool offline = false;
    std::string merge_dir;
};

int cmd_fetch(const FetchOpts& o) {
    std::optional<nn::Source> source = nn::source_from_string(o.source);
    if (!source) throw UsageError("unknown source '" + o.source + "'");
    if (o.ids.empty()) throw UsageError("no ids given; use --ids");

    nn::SourceConfig cfg;
    cfg.source = *source;
    cfg.base_url = o.base_url;
    cfg.cache_dir = o.cache_dir;
    cfg.min_request_interval = std::chrono::milliseconds(o.interval_ms);
    cfg.offline = o.offline;
    nn::SourceClient client(cfg);

    std::vector<nn::PersonRecord> records;
    std::vector<std::string> gaps;
    for (const std::string& id : o.ids) {
        nn::SourceClient::AncestryResult result = client.fetch_ancestry(id, o.depth);
        for (nn::PersonRecord& rec : result.records) records.push_back(std::move(rec));
        for (std::string& gap : result.gaps) gaps.push_back(std::move(gap));
    }

    if (!o.merge_dir.empty()) {
        nn::MergeResult merged = nn::merge_sources(records);
        nn::io::save_dataset_dir(merged.dataset, o.merge_dir);
    }

    return write_output(o.common.out, [&](std::ostream& os) {
        os << "records " << records.size() << "\n";
        os << "gaps " << gaps.size() << "\n";
        for (const std::string& gap : gaps) os << "gap " << gap << "\n";
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Professor-student genealogy networks of Nobel laureates: "
                 "build yearly snapshots, rank centralities, score institutions, "
                 "and run baseline statistics."};
    app.name("nobelnet");
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from an INI-style key=value file");

    ValidateOpts validate_opts;
    CLI::App* validate_cmd =
        app.add_subcommand("validate", "Check a dataset and report findings");
    add_common(validate_cmd, validate_opts.common);

    BuildOpts build_opts;
    CLI::App* build_cmd =
        app.add_subcommand("build", "Build yearly snapshots (or the full expansion)");
    add_common(build_cmd, build_opts.common);
    build_cmd->add_option("--year", build_opts.year, "Last snapshot year to report");
    build_cmd->add_flag("--full", build_opts.full,
                        "Expand to all ancestors of all laureates instead of snapshots");
    build_cmd->add_option("--cutoff", build_opts.cutoff,
                          "Cutoff roots for --full (their proper ancestors are excluded)")
        ->delimiter(',');
    build_cmd->add_option("--save-dir", build_opts.save_dir,
                          "Also save the built graph as nodes.csv/edges.csv");

    CentralityOpts centrality_opts;
    CLI::App* centrality_cmd =
        app.add_subcommand("centrality", "Rank nodes by Nobel-restricted outcloseness");
    add_common(centrality_cmd, centrality_opts.common);
    centrality_cmd->add_option("--year", centrality_opts.year, "Snapshot year (default: last)");
    centrality_cmd
        ->add_option_function<std::string>(
            "--measure",
            [&](const std::string& s) {
                auto m = nn::measure_from_string(s);
                if (!m) throw CLI::ValidationError("--measure", "must be arithmetic or harmonic");
                centrality_opts.measure = *m;
            },
            "arithmetic or harmonic")
        ->default_str("harmonic");
    centrality_cmd->add_flag("--history", centrality_opts.history,
                             "Emit one row per subject per year");
    centrality_cmd->add_option("--subjects", centrality_opts.subjects, "Restrict to these ids")
        ->delimiter(',');
    centrality_cmd->add_option("--top", centrality_opts.top, "Keep only the first N rows");

    TimelineOpts timeline_opts;
    CLI::App* timeline_cmd =
        app.add_subcommand("timeline", "Year-over-year growth and component counts");
    add_common(timeline_cmd, timeline_opts.common);

    UniversitiesOpts universities_opts;
    CLI::App* universities_cmd =
        app.add_subcommand("universities", "Institution points and market shares");
    add_common(universities_cmd, universities_opts.common);
    universities_cmd->add_option("--year", universities_opts.year, "Last year to report");
    universities_cmd
        ->add_option_function<std::string>(
            "--scheme",
            [&](const std::string& s) {
                auto m = nn::weight_mode_from_string(s);
                if (!m)
                    throw CLI::ValidationError("--scheme",
                                               "must be halving or centrality_weighted");
                universities_opts.scheme.mode = *m;
            },
            "halving or centrality_weighted")
        ->default_str("halving");
    universities_cmd->add_option("--top-k", universities_opts.top_k,
                                 "Named institutions; the rest aggregate")
        ->capture_default_str();

    SubgraphOpts subgraph_opts;
    CLI::App* subgraph_cmd =
        app.add_subcommand("subgraph", "Descendant subgraph of a root as DOT or GraphML");
    add_common(subgraph_cmd, subgraph_opts.common);
    subgraph_cmd->add_option("--root", subgraph_opts.root, "Root person id")->required();
    subgraph_cmd->add_option("--year", subgraph_opts.year, "Snapshot year (default: last)");
    subgraph_cmd->add_option("--format", subgraph_opts.format, "dot or graphml")
        ->check(CLI::IsMember({"dot", "graphml"}))
        ->capture_default_str();
    subgraph_cmd->add_flag("--highlight,!--no-highlight", subgraph_opts.highlight,
                           "Highlight laureates (DOT only)");

    CandidatesOpts candidates_opts;
    CLI::App* candidates_cmd =
        app.add_subcommand("candidates", "Incloseness of Nobel candidates");
    add_common(candidates_cmd, candidates_opts.common);
    candidates_cmd->add_option("--ids", candidates_opts.ids, "Candidate ids")->delimiter(',');
    candidates_cmd->add_flag("--all-flagged", candidates_opts.all_flagged,
                             "Include every person flagged as candidate");
    candidates_cmd->add_option("--year", candidates_opts.year, "Snapshot year (default: last)");
    candidates_cmd->add_option("--mode", candidates_opts.mode, "network, laureates, or both")
        ->check(CLI::IsMember({"network", "laureates", "both"}))
        ->capture_default_str();
    candidates_cmd->add_option("--counterfactual", candidates_opts.counterfactual_out,
                               "Also write rank deltas (all candidates marked laureate) here");

    BaselineOpts baseline_opts;
    CLI::App* baseline_cmd =
        app.add_subcommand("baseline", "Laureate path histogram and Monte Carlo band");
    add_common(baseline_cmd, baseline_opts.common, /*with_output=*/false);
    baseline_cmd->add_option("--year", baseline_opts.year, "Snapshot year (default: last)");
    baseline_cmd->add_option("--trials", baseline_opts.trials, "Monte Carlo trials")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000}))
        ->capture_default_str();
    baseline_cmd->add_option("--level", baseline_opts.level, "Band level, e.g. 0.9")
        ->check(CLI::Range(0.01, 0.9999))
        ->capture_default_str();
    baseline_cmd->add_option("--seed", baseline_opts.seed, "Master seed")->capture_default_str();
    baseline_cmd->add_option("--variant", baseline_opts.variant, "minimum or average")
        ->check(CLI::IsMember({"minimum", "average"}))
        ->capture_default_str();
    baseline_cmd->add_option("--strata", baseline_opts.strata, "degree_year or degree_year_bucket")
        ->check(CLI::IsMember({"degree_year", "degree_year_bucket"}))
        ->capture_default_str();
    baseline_cmd->add_option("--hist-out", baseline_opts.hist_out, "Reference histogram CSV")
        ->capture_default_str();
    baseline_cmd->add_option("--band-out", baseline_opts.band_out, "Confidence band CSV")
        ->capture_default_str();

    FetchOpts fetch_opts;
    CLI::App* fetch_cmd =
        app.add_subcommand("fetch", "Fetch ancestry records into the local cache");
    add_common(fetch_cmd, fetch_opts.common);
    fetch_cmd->add_option("--source", fetch_opts.source,
                          "manual, academic_tree, math_genealogy, or repec_genealogy")
        ->capture_default_str();
    fetch_cmd->add_option("--base-url", fetch_opts.base_url, "Source base URL");
    fetch_cmd->add_option("--cache", fetch_opts.cache_dir, "Cache directory")
        ->capture_default_str();
    fetch_cmd->add_option("--ids", fetch_opts.ids, "Root person ids")->delimiter(',');
    fetch_cmd->add_option("--depth", fetch_opts.depth, "Ancestor generations to follow")
        ->check(CLI::Range(0, 100))
        ->capture_default_str();
    fetch_cmd->add_option("--interval-ms", fetch_opts.interval_ms,
                          "Minimum spacing between requests")
        ->capture_default_str();
    fetch_cmd->add_flag("--offline", fetch_opts.offline, "Use the cache only, never the network");
    fetch_cmd->add_option("--merge-dir", fetch_opts.merge_dir,
                          "Merge fetched records into a dataset saved here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(validate_opts);
        if (build_cmd->parsed()) return cmd_build(build_opts);
        if (centrality_cmd->parsed()) return cmd_centrality(centrality_opts);
        if (timeline_cmd->parsed()) return cmd_timeline(timeline_opts);
        if (universities_cmd->parsed()) return cmd_universities(universities_opts);
        if (subgraph_cmd->parsed()) return cmd_subgraph(subgraph_opts);
        if (candidates_cmd->parsed()) return cmd_candidates(candidates_opts);
        if (baseline_cmd->parsed()) return cmd_baseline(baseline_opts);
        if (fetch_cmd->parsed()) return cmd_fetch(fetch_opts);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nn::DatasetError& e) {
        for (const nn::Finding& f : e.findings())
            std::cerr << "error " << f.code << " [" << f.subject << "]: " << f.message << "\n";
        return kExitData;
    } catch (const nn::csv::ParseError& e) {
        std::cerr << "csv error (line " << e.line() << "): " << e.what() << "\n";
        return kExitData;
    } catch (const nn::HarvestError& e) {
        std::cerr << "harvest error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return 0;
}
