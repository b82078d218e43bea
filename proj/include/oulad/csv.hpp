#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace oulad {

// A parsed CSV file: mandatory header row plus data rows, all fields as raw
// text. Dialect: comma separated, double-quote quoting with "" escapes,
// UTF-8, LF or CRLF line ends. Every data row must match the header width.
struct CsvTable {
    std::string name;  // file name used in error messages
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Index of a header column, -1 when absent.
    int column(std::string_view col) const;
    // Index of a header column; throws ParseError naming the file when absent.
    int require_column(std::string_view col) const;
};

CsvTable read_csv_text(std::string_view text, std::string name);
CsvTable read_csv_file(const std::filesystem::path& path);

std::string csv_escape(std::string_view field);
void write_csv_line(std::string& out, const std::vector<std::string>& fields);
void write_csv_file(const std::filesystem::path& path,
                    const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows);

}  // namespace oulad
