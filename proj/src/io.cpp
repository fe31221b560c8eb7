#include "nobelnet/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

#include "nobelnet/csv.hpp"

namespace nobelnet::io {
namespace {

using std::filesystem::path;

std::string where(const path& file, int line) {
    return file.filename().string() + ":" + std::to_string(line);
}

[[noreturn]] void fail(const path& file, int line, std::string code, std::string message) {
    throw DatasetError({{std::move(code), where(file, line), std::move(message)}});
}

/// Reads a CSV table, checks the verbatim header, and returns the data rows
/// with uniform field counts.
std::vector<csv::Row> load_rows(const path& file, std::span<const std::string_view> header) {
    std::vector<csv::Row> rows;
    try {
        rows = csv::read_file(file);
    } catch (const csv::ParseError& e) {
        throw DatasetError({{"csv-parse", where(file, e.line()), e.what()}});
    }
    if (rows.empty()) fail(file, 0, "csv-schema", "missing header row");
    const auto& head = rows.front().fields;
    if (head.size() != header.size() ||
        !std::equal(head.begin(), head.end(), header.begin())) {
        std::string want;
        for (std::string_view h : header) {
            if (!want.empty()) want += ',';
            want += h;
        }
        fail(file, rows.front().line, "csv-schema", "expected header: " + want);
    }
    rows.erase(rows.begin());
    for (const csv::Row& row : rows)
        if (row.fields.size() != header.size())
            fail(file, row.line, "csv-schema",
                 "expected " + std::to_string(header.size()) + " fields, got " +
                     std::to_string(row.fields.size()));
    return rows;
}

bool parse_bool(const path& file, int line, const std::string& s, std::string_view col) {
    if (s == "1") return true;
    if (s == "0" || s.empty()) return false;
    fail(file, line, "csv-value", std::string(col) + " must be 0 or 1, got '" + s + "'");
}

int parse_int(const path& file, int line, const std::string& s, std::string_view col) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        fail(file, line, "csv-value", std::string(col) + " must be an integer, got '" + s + "'");
    return v;
}

std::optional<int> parse_opt_int(const path& file, int line, const std::string& s,
                                 std::string_view col) {
    if (s.empty()) return std::nullopt;
    return parse_int(file, line, s, col);
}

std::vector<std::string> split_sources(const std::string& s) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t semi = s.find(';', start);
        if (semi == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, semi - start));
        start = semi + 1;
    }
    return out;
}

std::string join_sources(std::span<const std::string> sources) {
    std::string out;
    for (const std::string& s : sources) {
        if (!out.empty()) out += ';';
        out += s;
    }
    return out;
}

constexpr std::string_view kNodeHeader[] = {"id",          "name",        "gender",
                                            "laureate",    "prize_year",  "candidate",
                                            "degree_year", "degree_institution", "sources"};
constexpr std::string_view kEdgeHeader[] = {"advisor_id", "student_id", "kind", "source"};
constexpr std::string_view kCohortHeader[] = {"year", "laureate_id"};
constexpr std::string_view kOverlayHeader[] = {"action", "advisor_id", "student_id", "kind"};

std::vector<std::string> header_fields(std::span<const std::string_view> header) {
    return {header.begin(), header.end()};
}

std::ofstream open_out(const path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw DatasetError({{"io-write", file.string(), "cannot open file for writing"}});
    return out;
}

}  // namespace

Dataset load_dataset(const path& nodes_csv, const path& edges_csv) {
    Dataset ds;
    for (const csv::Row& row : load_rows(nodes_csv, kNodeHeader)) {
        const auto& f = row.fields;
        Person p;
        p.id = f[0];
        p.name = f[1];
        if (f[2].empty()) {
            p.gender = Gender::unknown;
        } else if (auto g = gender_from_string(f[2])) {
            p.gender = *g;
        } else {
            fail(nodes_csv, row.line, "csv-value", "unknown gender '" + f[2] + "'");
        }
        p.laureate = parse_bool(nodes_csv, row.line, f[3], "laureate");
        p.prize_year = parse_opt_int(nodes_csv, row.line, f[4], "prize_year");
        p.candidate = parse_bool(nodes_csv, row.line, f[5], "candidate");
        p.degree_year = parse_opt_int(nodes_csv, row.line, f[6], "degree_year");
        if (!f[7].empty()) p.degree_institution = f[7];
        p.sources = split_sources(f[8]);
        ds.persons.push_back(std::move(p));
        ds.person_rows.push_back(row.line);
    }
    for (const csv::Row& row : load_rows(edges_csv, kEdgeHeader)) {
        const auto& f = row.fields;
        AdvisingEdge e;
        e.advisor_id = f[0];
        e.student_id = f[1];
        if (auto k = edge_kind_from_string(f[2])) {
            e.kind = *k;
        } else {
            fail(edges_csv, row.line, "csv-value", "unknown edge kind '" + f[2] + "'");
        }
        e.source = f[3];
        ds.edges.push_back(std::move(e));
        ds.edge_rows.push_back(row.line);
    }
    return ds;
}

Dataset load_dataset_dir(const path& dir) {
    return load_dataset(dir / "nodes.csv", dir / "edges.csv");
}

void save_dataset(const Dataset& ds, const path& nodes_csv, const path& edges_csv) {
    {
        std::ofstream out = open_out(nodes_csv);
        csv::write_row(out, header_fields(kNodeHeader));
        for (const Person& p : ds.persons) {
            std::vector<std::string> f = {
                p.id,
                p.name,
                p.gender == Gender::unknown ? std::string() : std::string(to_string(p.gender)),
                p.laureate ? "1" : "0",
                p.prize_year ? std::to_string(*p.prize_year) : std::string(),
                p.candidate ? "1" : "0",
                p.degree_year ? std::to_string(*p.degree_year) : std::string(),
                p.degree_institution.value_or(std::string()),
                join_sources(p.sources),
            };
            csv::write_row(out, f);
        }
        if (!out) throw DatasetError({{"io-write", nodes_csv.string(), "write failed"}});
    }
    std::ofstream out = open_out(edges_csv);
    csv::write_row(out, header_fields(kEdgeHeader));
    for (const AdvisingEdge& e : ds.edges) {
        std::vector<std::string> f = {e.advisor_id, e.student_id, std::string(to_string(e.kind)),
                                      e.source};
        csv::write_row(out, f);
    }
    if (!out) throw DatasetError({{"io-write", edges_csv.string(), "write failed"}});
}

void save_dataset_dir(const Dataset& ds, const path& dir) {
    std::filesystem::create_directories(dir);
    save_dataset(ds, dir / "nodes.csv", dir / "edges.csv");
}

Cohorts load_cohorts(const path& file) {
    Cohorts cohorts;
    for (const csv::Row& row : load_rows(file, kCohortHeader)) {
        int year = parse_int(file, row.line, row.fields[0], "year");
        const std::string& id = row.fields[1];
        if (id.empty()) fail(file, row.line, "csv-value", "laureate_id must not be empty");
        cohorts.years[year].push_back(id);
    }
    return cohorts;
}

std::vector<OverlayEdit> load_overlay(const path& file) {
    std::vector<OverlayEdit> edits;
    for (const csv::Row& row : load_rows(file, kOverlayHeader)) {
        const auto& f = row.fields;
        OverlayEdit edit;
        if (f[0] == "add_edge" || f[0] == "remove_edge") {
            edit.action = f[0] == "add_edge" ? OverlayEdit::Action::add_edge
                                             : OverlayEdit::Action::remove_edge;
            if (f[1].empty() || f[2].empty())
                fail(file, row.line, "csv-value", f[0] + " needs advisor_id and student_id");
            edit.edge.advisor_id = f[1];
            edit.edge.student_id = f[2];
            if (auto k = edge_kind_from_string(f[3])) {
                edit.edge.kind = *k;
            } else {
                fail(file, row.line, "csv-value", "unknown edge kind '" + f[3] + "'");
            }
            edit.edge.source = "overlay";
        } else if (f[0] == "add_person") {
            edit.action = OverlayEdit::Action::add_person;
            if (f[1].empty())
                fail(file, row.line, "csv-value", "add_person needs an id in advisor_id");
            if (!f[2].empty() || !f[3].empty())
                fail(file, row.line, "csv-value",
                     "add_person takes no student_id or kind");
            edit.person.id = f[1];
        } else {
            fail(file, row.line, "csv-value", "unknown action '" + f[0] + "'");
        }
        edits.push_back(std::move(edit));
    }
    return edits;
}

}  // namespace nobelnet::io
