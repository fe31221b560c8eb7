#include "nobelnet/csv.hpp"

#include <fstream>
#include <sstream>

namespace nobelnet::csv {

std::vector<Row> parse(std::string_view text) {
    std::vector<Row> rows;
    Row cur;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;
    int line = 1;
    cur.line = 1;

    auto end_field = [&] {
        cur.fields.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_record = [&] {
        if (field_started || !field.empty() || !cur.fields.empty()) {
            end_field();
            rows.push_back(std::move(cur));
        }
        cur = Row{};
        cur.line = line;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field += c;
            }
        } else if (c == '"') {
            if (!field.empty())
                throw ParseError("unexpected quote inside unquoted field", line);
            in_quotes = true;
            field_started = true;
        } else if (c == ',') {
            end_field();
            field_started = true;  // a following empty field still counts
        } else if (c == '\r') {
            // swallowed; \r\n handled at \n
        } else if (c == '\n') {
            end_record();
            ++line;
            cur.line = line;
        } else {
            field += c;
            field_started = true;
        }
    }
    if (in_quotes) throw ParseError("unterminated quoted field", line);
    end_record();
    return rows;
}

std::vector<Row> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path.string(), 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string escape(std::string_view field) {
    bool needs_quotes = field.find_first_of(",\"\n\r") != std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_row(std::ostream& os, std::span<const std::string> fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) os << ',';
        os << escape(fields[i]);
    }
    os << '\n';
}

}  // namespace nobelnet::csv
