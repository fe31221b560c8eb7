#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nobelnet::csv {

struct Row {
    std::vector<std::string> fields;
    int line = 0;  // 1-based line the record starts on
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line) : std::runtime_error(what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Parses RFC 4180-style CSV: quoted fields, doubled quotes, embedded
/// newlines inside quotes. Blank records are skipped.
std::vector<Row> parse(std::string_view text);
std::vector<Row> read_file(const std::filesystem::path& path);

std::string escape(std::string_view field);
void write_row(std::ostream& os, std::span<const std::string> fields);

}  // namespace nobelnet::csv
