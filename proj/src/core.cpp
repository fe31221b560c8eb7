#include "nobelnet/core.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace nobelnet {

std::string_view to_string(Gender g) {
    switch (g) {
        case Gender::male: return "male";
        case Gender::female: return "female";
        default: return "unknown";
    }
}

std::string_view to_string(EdgeKind k) {
    switch (k) {
        case EdgeKind::phd: return "phd";
        case EdgeKind::habilitation: return "habilitation";
        case EdgeKind::masters: return "masters";
        default: return "mentor";
    }
}

std::optional<Gender> gender_from_string(std::string_view s) {
    if (s == "male") return Gender::male;
    if (s == "female") return Gender::female;
    if (s == "unknown" || s.empty()) return Gender::unknown;
    return std::nullopt;
}

std::optional<EdgeKind> edge_kind_from_string(std::string_view s) {
    if (s == "phd") return EdgeKind::phd;
    if (s == "habilitation") return EdgeKind::habilitation;
    if (s == "masters") return EdgeKind::masters;
    if (s == "mentor") return EdgeKind::mentor;
    return std::nullopt;
}

namespace {

std::string summarize(const std::vector<Finding>& errors) {
    std::ostringstream os;
    os << errors.size() << (errors.size() == 1 ? " dataset error" : " dataset errors");
    for (std::size_t i = 0; i < errors.size() && i < 4; ++i)
        os << "; [" << errors[i].code << "] " << errors[i].subject << ": " << errors[i].message;
    if (errors.size() > 4) os << "; ...";
    return os.str();
}

std::string row_ref(int row) {
    return row > 0 ? "row " + std::to_string(row) : "row ?";
}

// One concrete cycle among the residual nodes of a failed topological sort,
// reported with the file rows of its edges. Every residual node keeps an
// in-edge from another residual node, so walking predecessors must close a
// cycle; nodes merely downstream of a cycle need not have residual successors.
Finding describe_cycle(const Dataset& ds, const std::set<std::string>& residual) {
    auto residual_pred = [&](const std::string& id) -> std::pair<std::string, std::size_t> {
        for (std::size_t e = 0; e < ds.edges.size(); ++e)
            if (ds.edges[e].student_id == id && residual.contains(ds.edges[e].advisor_id))
                return {ds.edges[e].advisor_id, e};
        return {"", 0};
    };
    std::vector<std::string> chain;       // chain[i+1] advises chain[i]
    std::vector<std::size_t> chain_edge;  // edge reaching chain[i] from its listed advisor
    std::map<std::string, std::size_t> seen_at;
    std::string cur = *residual.begin();
    while (!seen_at.contains(cur)) {
        seen_at[cur] = chain.size();
        chain.push_back(cur);
        auto [prev, e] = residual_pred(cur);
        chain_edge.push_back(e);
        cur = prev;
    }
    const std::size_t j = seen_at[cur];  // cur == chain[j]; cycle spans chain[j..]
    std::ostringstream ids, rows;
    ids << chain[j];
    for (std::size_t i = chain.size(); i-- > j;) {
        if (rows.tellp() > 0) rows << ", ";
        rows << row_ref(ds.edge_row(chain_edge[i]));
        ids << " -> " << chain[i];
    }
    return {"cycle", chain[j], "advising cycle " + ids.str() + " (edges at " + rows.str() + ")"};
}

}  // namespace

DatasetError::DatasetError(std::vector<Finding> errors)
    : std::runtime_error(summarize(errors)), findings_(std::move(errors)) {}

ValidationReport validate(const Dataset& ds) {
    ValidationReport rep;
    auto error = [&](std::string code, std::string subject, std::string msg) {
        rep.errors.push_back({std::move(code), std::move(subject), std::move(msg)});
    };
    auto warn = [&](std::string code, std::string subject, std::string msg) {
        rep.warnings.push_back({std::move(code), std::move(subject), std::move(msg)});
    };

    std::map<std::string, std::vector<std::size_t>> by_id;
    for (std::size_t i = 0; i < ds.persons.size(); ++i)
        by_id[ds.persons[i].id].push_back(i);

    for (const auto& [id, occ] : by_id) {
        if (id.empty()) {
            error("empty-id", "<person>", row_ref(ds.person_row(occ.front())) + ": person with empty id");
            continue;
        }
        if (occ.size() > 1) {
            std::string rows;
            for (auto i : occ) rows += (rows.empty() ? "" : ", ") + row_ref(ds.person_row(i));
            error("duplicate-id", id, "person id defined more than once (" + rows + ")");
        }
    }

    for (std::size_t i = 0; i < ds.persons.size(); ++i) {
        const Person& p = ds.persons[i];
        if (p.laureate) {
            if (!p.prize_year)
                error("laureate-no-year", p.id, row_ref(ds.person_row(i)) + ": laureate without prize_year");
            else if (*p.prize_year < 1969)
                error("prize-year-range", p.id,
                      row_ref(ds.person_row(i)) + ": prize_year " + std::to_string(*p.prize_year) +
                          " predates the prize (1969)");
        }
        if (p.laureate && (!p.degree_year || !p.degree_institution))
            warn("missing-degree", p.id, "laureate with incomplete degree data");
    }

    std::map<std::string, std::vector<std::pair<std::string, std::size_t>>> succ;
    std::map<std::string, int> indeg;
    std::set<std::tuple<std::string, std::string, EdgeKind>> triples;
    bool structural_ok = true;
    for (std::size_t e = 0; e < ds.edges.size(); ++e) {
        const AdvisingEdge& edge = ds.edges[e];
        const std::string where = row_ref(ds.edge_row(e));
        const std::string label = edge.advisor_id + " -> " + edge.student_id;
        bool ok = true;
        if (edge.advisor_id == edge.student_id) {
            error("self-loop", label, where + ": advisor and student are the same person");
            ok = false;
        }
        if (!by_id.contains(edge.advisor_id)) {
            error("dangling-endpoint", label, where + ": unknown advisor id '" + edge.advisor_id + "'");
            ok = false;
        }
        if (!by_id.contains(edge.student_id)) {
            error("dangling-endpoint", label, where + ": unknown student id '" + edge.student_id + "'");
            ok = false;
        }
        if (!triples.insert({edge.advisor_id, edge.student_id, edge.kind}).second) {
            error("duplicate-edge", label,
                  where + ": duplicate (advisor, student, kind) triple with kind " +
                      std::string(to_string(edge.kind)));
            ok = false;
        }
        if (!ok) {
            structural_ok = false;
            continue;
        }
        succ[edge.advisor_id].push_back({edge.student_id, e});
        indeg[edge.student_id]++;

        const Person& adv = ds.persons[by_id[edge.advisor_id].front()];
        const Person& stu = ds.persons[by_id[edge.student_id].front()];
        if (adv.degree_year && stu.degree_year && *stu.degree_year < *adv.degree_year)
            warn("chronology", label,
                 "student degree year " + std::to_string(*stu.degree_year) +
                     " precedes advisor degree year " + std::to_string(*adv.degree_year));
    }

    // Kahn's algorithm; whatever survives feeds from a cycle.
    if (structural_ok && !ds.edges.empty()) {
        std::set<std::string> residual;
        for (const auto& [id, _] : by_id) residual.insert(id);
        std::vector<std::string> ready;
        for (const auto& id : residual)
            if (indeg[id] == 0) ready.push_back(id);
        while (!ready.empty()) {
            std::string id = std::move(ready.back());
            ready.pop_back();
            residual.erase(id);
            auto it = succ.find(id);
            if (it == succ.end()) continue;
            for (const auto& [to, _] : it->second)
                if (--indeg[to] == 0) ready.push_back(to);
        }
        if (!residual.empty()) rep.errors.push_back(describe_cycle(ds, residual));
    }

    return rep;
}

GenealogyGraph GenealogyGraph::build(Dataset ds) {
    ValidationReport rep = validate(ds);
    if (!rep.admissible()) throw DatasetError(std::move(rep.errors));

    GenealogyGraph g;
    g.persons_ = std::move(ds.persons);
    std::sort(g.persons_.begin(), g.persons_.end(),
              [](const Person& a, const Person& b) { return a.id < b.id; });
    g.index_.reserve(g.persons_.size());
    for (NodeIndex i = 0; i < g.persons_.size(); ++i) g.index_.emplace(g.persons_[i].id, i);

    g.edges_ = std::move(ds.edges);
    std::sort(g.edges_.begin(), g.edges_.end(), [](const AdvisingEdge& a, const AdvisingEdge& b) {
        return std::tie(a.advisor_id, a.student_id, a.kind) < std::tie(b.advisor_id, b.student_id, b.kind);
    });

    const std::size_t n = g.persons_.size();
    std::vector<std::set<NodeIndex>> succ(n), pred(n);
    for (const AdvisingEdge& e : g.edges_) {
        NodeIndex a = g.index_.at(e.advisor_id);
        NodeIndex s = g.index_.at(e.student_id);
        succ[a].insert(s);
        pred[s].insert(a);
    }
    auto pack = [n](const std::vector<std::set<NodeIndex>>& adj, std::vector<std::uint32_t>& offsets,
                    std::vector<NodeIndex>& flat) {
        offsets.assign(n + 1, 0);
        for (std::size_t i = 0; i < n; ++i) offsets[i + 1] = offsets[i] + static_cast<std::uint32_t>(adj[i].size());
        flat.reserve(offsets[n]);
        for (std::size_t i = 0; i < n; ++i) flat.insert(flat.end(), adj[i].begin(), adj[i].end());
    };
    pack(succ, g.succ_offsets_, g.succ_);
    pack(pred, g.pred_offsets_, g.pred_);
    return g;
}

std::optional<NodeIndex> GenealogyGraph::find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

NodeIndex GenealogyGraph::require(std::string_view id) const {
    if (auto i = find(id)) return *i;
    throw DatasetError({{"unknown-person", std::string(id), "no person with this id in the graph"}});
}

std::span<const NodeIndex> GenealogyGraph::students(NodeIndex i) const {
    return {succ_.data() + succ_offsets_[i], succ_.data() + succ_offsets_[i + 1]};
}

std::span<const NodeIndex> GenealogyGraph::advisors(NodeIndex i) const {
    return {pred_.data() + pred_offsets_[i], pred_.data() + pred_offsets_[i + 1]};
}

GenealogyGraph GenealogyGraph::induced(std::span<const NodeIndex> nodes) const {
    std::vector<char> keep(persons_.size(), 0);
    for (NodeIndex i : nodes) keep[i] = 1;
    Dataset ds;
    for (NodeIndex i = 0; i < persons_.size(); ++i)
        if (keep[i]) ds.persons.push_back(persons_[i]);
    for (const AdvisingEdge& e : edges_)
        if (keep[index_.at(e.advisor_id)] && keep[index_.at(e.student_id)]) ds.edges.push_back(e);
    return build(std::move(ds));
}

Dataset GenealogyGraph::to_dataset() const {
    Dataset ds;
    ds.persons = persons_;
    ds.edges = edges_;
    return ds;
}

}  // namespace nobelnet
