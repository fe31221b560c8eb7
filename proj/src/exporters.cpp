#include "nobelnet/exporters.hpp"

#include <algorithm>
#include <sstream>

namespace nobelnet {

namespace {

std::string dot_quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string export_dot(const GenealogyGraph& g, std::span<const std::string> highlight) {
    std::ostringstream out;
    out << "digraph genealogy {\n";
    out << "  node [shape=box];\n";
    for (const Person& p : g.persons()) {
        out << "  " << dot_quote(p.id) << " [label="
            << dot_quote(p.name.empty() ? p.id : p.name);
        if (std::find(highlight.begin(), highlight.end(), p.id) != highlight.end())
            out << ", style=filled, fillcolor=magenta";
        out << "];\n";
    }
    for (const AdvisingEdge& e : g.edges())
        out << "  " << dot_quote(e.advisor_id) << " -> " << dot_quote(e.student_id)
            << " [label=" << dot_quote(to_string(e.kind)) << "];\n";
    out << "}\n";
    return out.str();
}

std::string export_graphml(const GenealogyGraph& g) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
    const struct {
        const char* id;
        const char* domain;
        const char* type;
    } keys[] = {
        {"name", "node", "string"},          {"gender", "node", "string"},
        {"laureate", "node", "boolean"},     {"prize_year", "node", "int"},
        {"candidate", "node", "boolean"},    {"degree_year", "node", "int"},
        {"degree_institution", "node", "string"}, {"kind", "edge", "string"},
        {"provenance", "edge", "string"},
    };
    for (const auto& k : keys)
        out << "  <key id=\"" << k.id << "\" for=\"" << k.domain << "\" attr.name=\"" << k.id
            << "\" attr.type=\"" << k.type << "\"/>\n";
    out << "  <graph id=\"G\" edgedefault=\"directed\">\n";

    auto data = [&out](const char* key, const std::string& value) {
        out << "      <data key=\"" << key << "\">" << xml_escape(value) << "</data>\n";
    };
    for (const Person& p : g.persons()) {
        out << "    <node id=\"" << xml_escape(p.id) << "\">\n";
        data("name", p.name);
        if (p.gender != Gender::unknown) data("gender", std::string(to_string(p.gender)));
        data("laureate", p.laureate ? "true" : "false");
        if (p.prize_year) data("prize_year", std::to_string(*p.prize_year));
        data("candidate", p.candidate ? "true" : "false");
        if (p.degree_year) data("degree_year", std::to_string(*p.degree_year));
        if (p.degree_institution) data("degree_institution", *p.degree_institution);
        out << "    </node>\n";
    }
    for (const AdvisingEdge& e : g.edges()) {
        out << "    <edge source=\"" << xml_escape(e.advisor_id) << "\" target=\""
            << xml_escape(e.student_id) << "\">\n";
        data("kind", std::string(to_string(e.kind)));
        if (!e.source.empty()) data("provenance", e.source);
        out << "    </edge>\n";
    }
    out << "  </graph>\n</graphml>\n";
    return out.str();
}

}  // namespace nobelnet
