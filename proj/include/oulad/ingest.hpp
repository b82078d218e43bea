#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "oulad/tables.hpp"

namespace oulad {

// The seven file names the loader expects inside a data directory.
const std::vector<std::string>& oulad_file_names();

// Parses the seven OULAD CSVs from data_dir. Column binding is header-driven;
// "", "?" and "NA" are treated as missing. Missing file -> AcquisitionError;
// malformed field -> ParseError with file, line and column.
RawTables load_oulad(const std::filesystem::path& data_dir);

// Writes the seven CSVs in canonical form (header row, LF line ends, missing
// values as empty fields). load_oulad(write_oulad(raw)) == raw.
void write_oulad(const RawTables& raw, const std::filesystem::path& dir);

// The bundled AAA-2013J sample: exactly 5,000 studentVle rows plus the
// supporting rows of the other six tables.
RawTables load_sample();

struct ValidationReport {
    std::map<std::string, std::size_t> row_counts;                   // per table
    std::map<std::string, std::vector<std::string>> violations;      // check id -> offending keys
    bool pass = true;                                                // all violation lists empty

    std::size_t total_violations() const;
};

// Referential and range checks over RawTables. Violations are data, not
// errors; the call itself never throws.
ValidationReport validate_schema(const RawTables& raw);

}  // namespace oulad
