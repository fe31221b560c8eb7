#include "nobelnet/harvest.hpp"

#include <algorithm>
#include <charconv>
#include <ctime>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include <httplib.h>

namespace nobelnet {

std::string_view to_string(Source s) {
    switch (s) {
        case Source::manual: return "manual";
        case Source::academic_tree: return "academic_tree";
        case Source::math_genealogy: return "math_genealogy";
        default: return "repec_genealogy";
    }
}

std::optional<Source> source_from_string(std::string_view s) {
    if (s == "manual") return Source::manual;
    if (s == "academic_tree") return Source::academic_tree;
    if (s == "math_genealogy") return Source::math_genealogy;
    if (s == "repec_genealogy") return Source::repec_genealogy;
    return std::nullopt;
}

int source_precedence(Source s) {
    switch (s) {
        case Source::manual: return 0;  // hand curation overrides everything
        case Source::academic_tree: return 1;
        case Source::math_genealogy: return 2;
        default: return 3;
    }
}

namespace {

constexpr std::string_view kRecordMagic = "nobelnet-record 1";

std::string now_utc() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

int parse_record_int(std::string_view value, std::string_view key) {
    int v = 0;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || p != value.data() + value.size())
        throw HarvestError("record field '" + std::string(key) + "' is not an integer: '" +
                           std::string(value) + "'");
    return v;
}

bool parse_record_bool(std::string_view value, std::string_view key) {
    if (value == "1") return true;
    if (value == "0") return false;
    throw HarvestError("record field '" + std::string(key) + "' must be 0 or 1: '" +
                       std::string(value) + "'");
}

}  // namespace

std::string serialize_record(const PersonRecord& rec) {
    std::ostringstream out;
    out << kRecordMagic << '\n';
    out << "id " << rec.id << '\n';
    out << "source " << rec.source << '\n';
    if (!rec.fetched_at.empty()) out << "fetched_at " << rec.fetched_at << '\n';
    if (!rec.name.empty()) out << "name " << rec.name << '\n';
    if (rec.gender) out << "gender " << to_string(*rec.gender) << '\n';
    if (rec.laureate) out << "laureate " << (*rec.laureate ? '1' : '0') << '\n';
    if (rec.prize_year) out << "prize_year " << *rec.prize_year << '\n';
    if (rec.candidate) out << "candidate " << (*rec.candidate ? '1' : '0') << '\n';
    if (rec.degree_year) out << "degree_year " << *rec.degree_year << '\n';
    if (rec.degree_institution) out << "degree_institution " << *rec.degree_institution << '\n';
    for (const auto& [id, kind] : rec.advisors) out << "advisor " << to_string(kind) << ' ' << id << '\n';
    return out.str();
}

PersonRecord parse_record(std::string_view text) {
    PersonRecord rec;
    std::size_t pos = 0;
    bool first = true;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (first) {
            if (line != kRecordMagic)
                throw HarvestError("not a nobelnet record (bad magic line)");
            first = false;
            continue;
        }
        if (line.empty()) continue;
        std::size_t space = line.find(' ');
        std::string_view key = line.substr(0, space);
        std::string_view value = space == std::string_view::npos ? "" : line.substr(space + 1);
        if (key == "id") {
            rec.id = value;
        } else if (key == "source") {
            rec.source = value;
        } else if (key == "fetched_at") {
            rec.fetched_at = value;
        } else if (key == "name") {
            rec.name = value;
        } else if (key == "gender") {
            auto g = gender_from_string(value);
            if (!g) throw HarvestError("unknown gender: '" + std::string(value) + "'");
            rec.gender = *g;
        } else if (key == "laureate") {
            rec.laureate = parse_record_bool(value, key);
        } else if (key == "prize_year") {
            rec.prize_year = parse_record_int(value, key);
        } else if (key == "candidate") {
            rec.candidate = parse_record_bool(value, key);
        } else if (key == "degree_year") {
            rec.degree_year = parse_record_int(value, key);
        } else if (key == "degree_institution") {
            rec.degree_institution = std::string(value);
        } else if (key == "advisor") {
            std::size_t sep = value.find(' ');
            if (sep == std::string_view::npos)
                throw HarvestError("advisor line needs '<kind> <id>'");
            auto kind = edge_kind_from_string(value.substr(0, sep));
            std::string_view advisor_id = value.substr(sep + 1);
            if (!kind || advisor_id.empty())
                throw HarvestError("advisor line needs '<kind> <id>'");
            rec.advisors.emplace_back(std::string(advisor_id), *kind);
        } else {
            throw HarvestError("unknown record key: '" + std::string(key) + "'");
        }
    }
    if (rec.id.empty()) throw HarvestError("record has no id");
    if (rec.source.empty()) throw HarvestError("record has no source");
    return rec;
}

SourceClient::SourceClient(SourceConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.min_request_interval <= std::chrono::milliseconds::zero())
        throw HarvestError("min_request_interval must be positive");
}

std::filesystem::path SourceClient::cache_path(const std::string& id) const {
    return cfg_.cache_dir / std::string(to_string(cfg_.source)) / (id + ".rec");
}

std::size_t SourceClient::requests_issued() const {
    std::lock_guard lock(mutex_);
    return requests_;
}

PersonRecord SourceClient::fetch_person(const std::string& id) {
    const std::filesystem::path path = cache_path(id);
    if (std::filesystem::exists(path)) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        if (!in)
            throw HarvestError("cannot read cache entry " + path.string());
        return parse_record(buf.str());
    }
    if (cfg_.offline)
        throw HarvestError("offline and not cached: " + std::string(to_string(cfg_.source)) +
                           "/" + id);

    PersonRecord rec = fetch_remote(id);
    if (rec.fetched_at.empty()) rec.fetched_at = now_utc();

    // Atomic cache write: temp file in the final directory, then rename.
    std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        out << serialize_record(rec);
        if (!out) throw HarvestError("cannot write cache entry " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
    return rec;
}

PersonRecord SourceClient::fetch_remote(const std::string& id) {
    std::unique_lock lock(mutex_);
    if (any_request_) {
        auto earliest = last_request_ + cfg_.min_request_interval;
        std::this_thread::sleep_until(earliest);
    }
    last_request_ = std::chrono::steady_clock::now();
    any_request_ = true;
    ++requests_;
    lock.unlock();

    httplib::Client client(cfg_.base_url);
    auto res = client.Get("/person/" + id);
    const std::string context = std::string(to_string(cfg_.source)) + "/" + id;
    if (!res) throw HarvestError("transport failure fetching " + context);
    if (res->status != 200)
        throw HarvestError("HTTP " + std::to_string(res->status) + " fetching " + context);
    try {
        PersonRecord rec = parse_record(res->body);
        if (rec.id != id)
            throw HarvestError("payload id '" + rec.id + "' does not match requested " + context);
        return rec;
    } catch (const HarvestError& e) {
        throw HarvestError("unparseable payload for " + context + ": " + e.what());
    }
}

SourceClient::AncestryResult SourceClient::fetch_ancestry(const std::string& id, int depth) {
    AncestryResult out;
    std::set<std::string> visited{id};
    std::vector<std::string> frontier{id};
    for (int d = 0; d <= depth && !frontier.empty(); ++d) {
        std::vector<std::string> next;
        for (const std::string& cur : frontier) {
            PersonRecord rec;
            try {
                rec = fetch_person(cur);
            } catch (const HarvestError&) {
                out.gaps.push_back(cur);
                continue;
            }
            if (d < depth)
                for (const auto& [advisor_id, _] : rec.advisors)
                    if (visited.insert(advisor_id).second) next.push_back(advisor_id);
            out.records.push_back(std::move(rec));
        }
        frontier = std::move(next);
    }
    return out;
}

MergeResult merge_sources(std::span<const PersonRecord> records) {
    MergeResult result;
    std::vector<Finding> errors;

    auto rank = [&](const PersonRecord& r) {
        auto s = source_from_string(r.source);
        return s ? source_precedence(*s) : 99;  // unknown tags lose to everything
    };

    std::map<std::string, std::vector<const PersonRecord*>> by_id;
    for (const PersonRecord& r : records) by_id[r.id].push_back(&r);

    std::map<std::tuple<std::string, std::string, EdgeKind>, std::string> edge_sources;

    for (auto& [id, refs] : by_id) {
        std::stable_sort(refs.begin(), refs.end(),
                         [&](const PersonRecord* a, const PersonRecord* b) {
                             return rank(*a) < rank(*b);
                         });
        Person p;
        p.id = id;

        std::string name_source;
        for (const PersonRecord* r : refs) {
            if (r->name.empty()) continue;
            if (p.name.empty()) {
                p.name = r->name;
                name_source = r->source;
            } else if (p.name != r->name) {
                errors.push_back({"id-collision", id,
                                  "conflicting names '" + p.name + "' (" + name_source +
                                      ") vs '" + r->name + "' (" + r->source + ")"});
            }
        }

        // First (highest-precedence) asserted value wins; disagreement from a
        // lower-precedence source is only worth a warning.
        auto resolve = [&](const auto& get, auto& out_field, std::string_view field) {
            std::string winner;
            for (const PersonRecord* r : refs) {
                const auto& v = get(*r);
                if (!v) continue;
                if (winner.empty()) {
                    out_field = *v;
                    winner = r->source;
                } else if (!(*v == out_field)) {
                    result.warnings.push_back(
                        {"merge-conflict", id,
                         std::string(field) + " from " + winner + " overrides " + r->source});
                }
            }
        };

        resolve([](const PersonRecord& r) { return r.gender; }, p.gender, "gender");
        resolve([](const PersonRecord& r) { return r.laureate; }, p.laureate, "laureate");
        resolve([](const PersonRecord& r) { return r.candidate; }, p.candidate, "candidate");
        resolve([](const PersonRecord& r) { return r.prize_year; }, p.prize_year, "prize_year");
        resolve([](const PersonRecord& r) { return r.degree_year; }, p.degree_year,
                "degree_year");
        resolve([](const PersonRecord& r) { return r.degree_institution; }, p.degree_institution,
                "degree_institution");

        for (const PersonRecord* r : refs)
            if (std::find(p.sources.begin(), p.sources.end(), r->source) == p.sources.end())
                p.sources.push_back(r->source);

        for (const PersonRecord* r : refs)
            for (const auto& [advisor_id, kind] : r->advisors)
                edge_sources.try_emplace({advisor_id, id, kind}, r->source);

        result.dataset.persons.push_back(std::move(p));
    }

    if (!errors.empty()) throw DatasetError(std::move(errors));

    for (const auto& [key, src] : edge_sources) {
        const auto& [advisor_id, student_id, kind] = key;
        result.dataset.edges.push_back({advisor_id, student_id, kind, src});
    }

    ValidationReport report = validate(result.dataset);
    if (!report.admissible()) throw DatasetError(report.errors);
    result.warnings.insert(result.warnings.end(), report.warnings.begin(), report.warnings.end());
    return result;
}

}  // namespace nobelnet
