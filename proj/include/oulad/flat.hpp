#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "oulad/cell.hpp"

namespace oulad {

// One-row-per-observation table with typed cells. The working shape of every
// extract and of the combined dataset.
struct FlatTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    int column(std::string_view name) const;
    // Throws SpecError naming the column when absent.
    int require_column(std::string_view name) const;

    std::size_t n_rows() const { return rows.size(); }
    std::size_t n_cols() const { return columns.size(); }

    friend bool operator==(const FlatTable&, const FlatTable&) = default;
};

// CSV with header; missing cells become empty fields.
void write_flat_csv(const FlatTable& table, const std::filesystem::path& path);

// Line-delimited JSON, one object per row; missing cells become null.
void write_flat_jsonl(const FlatTable& table, const std::filesystem::path& path);

// Reads a CSV back into typed cells: empty field -> missing, integer-shaped
// -> integer, numeric -> real, anything else -> text.
FlatTable read_flat_csv(const std::filesystem::path& path);

}  // namespace oulad
