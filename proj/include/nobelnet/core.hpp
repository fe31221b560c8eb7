#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nobelnet {

using NodeIndex = std::uint32_t;
inline constexpr NodeIndex kInvalidNode = static_cast<NodeIndex>(-1);

enum class Gender { male, female, unknown };
enum class EdgeKind { phd, habilitation, masters, mentor };

std::string_view to_string(Gender g);
std::string_view to_string(EdgeKind k);
std::optional<Gender> gender_from_string(std::string_view s);
std::optional<EdgeKind> edge_kind_from_string(std::string_view s);

/// A scholar node. `id` is a source-qualified stable identifier and the only
/// key used for identity; all other fields are descriptive.
struct Person {
    std::string id;
    std::string name;
    Gender gender = Gender::unknown;
    bool laureate = false;
    std::optional<int> prize_year;
    bool candidate = false;
    std::optional<int> degree_year;
    std::optional<std::string> degree_institution;
    std::vector<std::string> sources;

    bool operator==(const Person&) const = default;
};

/// Directed professor -> student relation. (advisor_id, student_id, kind)
/// triples are unique within a dataset; `source` is provenance only.
struct AdvisingEdge {
    std::string advisor_id;
    std::string student_id;
    EdgeKind kind = EdgeKind::phd;
    std::string source;

    bool operator==(const AdvisingEdge&) const = default;
};

struct Finding {
    std::string code;
    std::string subject;
    std::string message;

    bool operator==(const Finding&) const = default;
};

struct ValidationReport {
    std::vector<Finding> errors;
    std::vector<Finding> warnings;

    bool admissible() const { return errors.empty(); }
};

/// Raw person/edge collections before graph construction. Row vectors, when
/// non-empty, give the 1-based source-file line of each entry and are used
/// for diagnostics only.
struct Dataset {
    std::vector<Person> persons;
    std::vector<AdvisingEdge> edges;
    std::vector<int> person_rows;
    std::vector<int> edge_rows;

    int person_row(std::size_t i) const {
        return i < person_rows.size() ? person_rows[i] : -1;
    }
    int edge_row(std::size_t i) const {
        return i < edge_rows.size() ? edge_rows[i] : -1;
    }
};

class DatasetError : public std::runtime_error {
public:
    explicit DatasetError(std::vector<Finding> errors);
    const std::vector<Finding>& findings() const { return findings_; }

private:
    std::vector<Finding> findings_;
};

/// Structural and plausibility checks over raw data. Errors mark the dataset
/// inadmissible (duplicate ids, dangling endpoints, self-loops, duplicate
/// edge triples, cycles, laureates without a prize year); warnings flag
/// suspicious but acceptable content (chronology, missing degree data).
ValidationReport validate(const Dataset& ds);

/// Immutable, validated DAG over persons and advising edges. Persons are held
/// in ascending id order; node indices refer to that order. Safe to share
/// across threads once constructed.
class GenealogyGraph {
public:
    GenealogyGraph() = default;

    /// Validates and indexes `ds`; throws DatasetError when the report has
    /// errors. Warnings are dropped here — run validate() first to see them.
    static GenealogyGraph build(Dataset ds);

    std::size_t node_count() const { return persons_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return persons_.empty(); }

    const Person& person(NodeIndex i) const { return persons_[i]; }
    const std::vector<Person>& persons() const { return persons_; }
    const std::vector<AdvisingEdge>& edges() const { return edges_; }

    std::optional<NodeIndex> find(std::string_view id) const;
    /// Like find() but throws DatasetError (code unknown-person) on a miss.
    NodeIndex require(std::string_view id) const;
    bool contains(std::string_view id) const { return find(id).has_value(); }

    /// Distinct student successors of `i`, ascending. Parallel edges of
    /// different kinds collapse to one adjacency entry.
    std::span<const NodeIndex> students(NodeIndex i) const;
    /// Distinct advisor predecessors of `i`, ascending.
    std::span<const NodeIndex> advisors(NodeIndex i) const;

    /// Node-induced subgraph: the given persons plus every edge whose two
    /// endpoints are both selected. `nodes` need not be sorted or unique.
    GenealogyGraph induced(std::span<const NodeIndex> nodes) const;

    Dataset to_dataset() const;

    /// Graph equality: identical person records and identical edge records
    /// (both in canonical order).
    bool operator==(const GenealogyGraph& other) const {
        return persons_ == other.persons_ && edges_ == other.edges_;
    }

private:
    std::vector<Person> persons_;       // ascending id
    std::vector<AdvisingEdge> edges_;   // ascending (advisor, student, kind)
    std::unordered_map<std::string, NodeIndex> index_;
    std::vector<std::uint32_t> succ_offsets_;
    std::vector<NodeIndex> succ_;
    std::vector<std::uint32_t> pred_offsets_;
    std::vector<NodeIndex> pred_;
};

}  // namespace nobelnet
