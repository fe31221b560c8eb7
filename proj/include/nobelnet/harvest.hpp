#pragma once

#include <chrono>
#include <filesystem>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nobelnet/core.hpp"

namespace nobelnet {

enum class Source { manual, academic_tree, math_genealogy, repec_genealogy };
std::string_view to_string(Source s);
std::optional<Source> source_from_string(std::string_view s);
/// Merge precedence rank; lower wins. Manual entries override everything.
int source_precedence(Source s);

struct SourceConfig {
    Source source = Source::academic_tree;
    std::string base_url;  // e.g. http://127.0.0.1:8080; may be empty when offline
    std::chrono::milliseconds min_request_interval{1000};
    std::filesystem::path cache_dir;
    bool offline = false;  // forbid network use; uncached ids become errors
};

/// One source's view of a person: identity, attributes the source asserts
/// (absent optionals mean "source is silent"), and advisor links.
struct PersonRecord {
    std::string id;
    std::string source;      // provenance tag, always set
    std::string fetched_at;  // ISO 8601 UTC; empty for hand-written fixtures
    std::string name;
    std::optional<Gender> gender;
    std::optional<bool> laureate;
    std::optional<int> prize_year;
    std::optional<bool> candidate;
    std::optional<int> degree_year;
    std::optional<std::string> degree_institution;
    std::vector<std::pair<std::string, EdgeKind>> advisors;  // advisor id, link kind

    bool operator==(const PersonRecord&) const = default;
};

/// Versioned plain-text serialization ("nobelnet-record 1", then one
/// "key value" line per field, "advisor <kind> <id>" per link). parse
/// throws HarvestError on malformed input.
std::string serialize_record(const PersonRecord& rec);
PersonRecord parse_record(std::string_view text);

class HarvestError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cache-first client for one source. Cache layout: cache_dir/<source>/<id>.rec,
/// written atomically (temp file + rename). Requests are serialized and spaced
/// by min_request_interval; cache hits issue no request. Safe for concurrent
/// use from multiple threads.
class SourceClient {
public:
    explicit SourceClient(SourceConfig cfg);

    /// Cached record, or GET <base_url>/person/<id> and cache the response.
    PersonRecord fetch_person(const std::string& id);

    struct AncestryResult {
        std::vector<PersonRecord> records;  // fetch order (breadth-first)
        std::vector<std::string> gaps;      // ids that failed to fetch or parse
    };

    /// Breadth-first closure over advisor links, up to `depth` generations;
    /// every person fetched at most once. Failures become gap entries.
    AncestryResult fetch_ancestry(const std::string& id, int depth);

    const SourceConfig& config() const { return cfg_; }
    std::size_t requests_issued() const;

private:
    std::filesystem::path cache_path(const std::string& id) const;
    PersonRecord fetch_remote(const std::string& id);

    SourceConfig cfg_;
    mutable std::mutex mutex_;
    std::chrono::steady_clock::time_point last_request_;
    bool any_request_ = false;
    std::size_t requests_ = 0;
};

/// Merged dataset plus non-fatal findings (attribute conflicts resolved by
/// precedence, chronology flags from validation).
struct MergeResult {
    Dataset dataset;
    std::vector<Finding> warnings;
};

/// Combines records from several sources into one dataset. Person attributes
/// come from the highest-precedence source that asserts them; edges are the
/// union of all advisor links (provenance kept from the best source).
/// Conflicting names for one id are irreconcilable and throw; the merged
/// dataset is validated and must be admissible.
MergeResult merge_sources(std::span<const PersonRecord> records);

}  // namespace nobelnet
