#include "oulad/flat.hpp"

#include <charconv>
#include <fstream>

#include <json.hpp>

#include "oulad/csv.hpp"
#include "oulad/errors.hpp"

namespace oulad {
namespace {

Cell cell_from_field(const std::string& field) {
    if (field.empty()) return Cell::missing();
    {
        long long v = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (ec == std::errc() && ptr == field.data() + field.size()) return Cell::integer(v);
    }
    {
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (ec == std::errc() && ptr == field.data() + field.size()) return Cell::real(v);
    }
    return Cell::text(field);
}

}  // namespace

int FlatTable::column(std::string_view name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) return static_cast<int>(i);
    }
    return -1;
}

int FlatTable::require_column(std::string_view name) const {
    int idx = column(name);
    if (idx < 0) throw SpecError("unknown column '" + std::string(name) + "'");
    return idx;
}

void write_flat_csv(const FlatTable& table, const std::filesystem::path& path) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        std::vector<std::string> fields;
        fields.reserve(row.size());
        for (const auto& cell : row) fields.push_back(cell.to_field());
        rows.push_back(std::move(fields));
    }
    write_csv_file(path, table.columns, rows);
}

void write_flat_jsonl(const FlatTable& table, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw AcquisitionError("cannot write file: " + path.string());
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            const Cell& c = row[i];
            if (c.is_missing())
                obj[table.columns[i]] = nullptr;
            else if (c.is_integer())
                obj[table.columns[i]] = c.integer_value();
            else if (c.is_real())
                obj[table.columns[i]] = c.number();
            else
                obj[table.columns[i]] = c.text_value();
        }
        out << obj.dump() << '\n';
    }
    if (!out) throw AcquisitionError("write failed: " + path.string());
}

FlatTable read_flat_csv(const std::filesystem::path& path) {
    CsvTable csv = read_csv_file(path);
    FlatTable table;
    table.columns = csv.header;
    table.rows.reserve(csv.rows.size());
    for (const auto& row : csv.rows) {
        std::vector<Cell> cells;
        cells.reserve(row.size());
        for (const auto& field : row) cells.push_back(cell_from_field(field));
        table.rows.push_back(std::move(cells));
    }
    return table;
}

}  // namespace oulad
