#include "oulad/csv.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "oulad/errors.hpp"

namespace oulad {
namespace {

struct Parser {
    std::string_view text;
    const std::string& name;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t col = 1;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(name, line, col, msg); }

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    // Consumes one record; returns false at end of input.
    bool read_record(std::vector<std::string>& fields) {
        fields.clear();
        if (done()) return false;

        std::string field;
        bool quoted = false;
        bool after_quote = false;  // just closed a quoted field

        while (true) {
            if (done()) {
                if (quoted) fail("unterminated quoted field");
                fields.push_back(std::move(field));
                return true;
            }
            char c = peek();
            if (quoted) {
                if (c == '"') {
                    advance();
                    if (!done() && peek() == '"') {
                        field.push_back('"');
                        advance();
                    } else {
                        quoted = false;
                        after_quote = true;
                    }
                } else {
                    field.push_back(c);
                    advance();
                }
                continue;
            }
            if (c == ',') {
                fields.push_back(std::move(field));
                field.clear();
                after_quote = false;
                advance();
                continue;
            }
            if (c == '\r' || c == '\n') {
                if (c == '\r') {
                    advance();
                    if (!done() && peek() == '\n') advance();
                } else {
                    advance();
                }
                fields.push_back(std::move(field));
                return true;
            }
            if (c == '"') {
                if (after_quote || !field.empty()) fail("unexpected quote inside field");
                quoted = true;
                advance();
                continue;
            }
            if (after_quote) fail("unexpected character after closing quote");
            field.push_back(c);
            advance();
        }
    }
};

bool needs_quoting(std::string_view field) {
    return field.find_first_of(",\"\r\n") != std::string_view::npos;
}

}  // namespace

int CsvTable::column(std::string_view col) const {
    auto it = std::find(header.begin(), header.end(), col);
    if (it == header.end()) return -1;
    return static_cast<int>(it - header.begin());
}

int CsvTable::require_column(std::string_view col) const {
    int idx = column(col);
    if (idx < 0) throw ParseError(name, 1, 1, "missing required column '" + std::string(col) + "'");
    return idx;
}

CsvTable read_csv_text(std::string_view text, std::string name) {
    // Strip a UTF-8 BOM if present.
    if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

    CsvTable table;
    table.name = std::move(name);

    Parser p{text, table.name};
    std::vector<std::string> fields;
    if (!p.read_record(fields)) throw ParseError(table.name, 1, 1, "missing header row");
    table.header = fields;

    std::size_t record_line = p.line;
    while (true) {
        record_line = p.line;
        if (!p.read_record(fields)) break;
        if (fields.size() == 1 && fields[0].empty() && p.done()) break;  // trailing newline
        if (fields.size() != table.header.size()) {
            throw ParseError(table.name, record_line, 1,
                             "row has " + std::to_string(fields.size()) + " fields, header has " +
                                 std::to_string(table.header.size()));
        }
        table.rows.push_back(std::move(fields));
        fields = {};
    }
    return table;
}

CsvTable read_csv_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw AcquisitionError("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_csv_text(buf.str(), path.filename().string());
}

std::string csv_escape(std::string_view field) {
    if (!needs_quoting(field)) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

void write_csv_line(std::string& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        out += csv_escape(fields[i]);
    }
    out.push_back('\n');
}

void write_csv_file(const std::filesystem::path& path,
                    const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    write_csv_line(out, header);
    for (const auto& row : rows) write_csv_line(out, row);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw AcquisitionError("cannot write file: " + path.string());
    f.write(out.data(), static_cast<std::streamsize>(out.size()));
    if (!f) throw AcquisitionError("write failed: " + path.string());
}

}  // namespace oulad
