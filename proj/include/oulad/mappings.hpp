#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace oulad {

// Maps VLE activity types onto learning-style categories. Entries keep file
// order; that order drives classified column order.
struct ActivityMapping {
    std::string name;
    std::string source;  // provenance annotation from the mapping file
    std::vector<std::pair<std::string, std::string>> entries;  // activity_type -> category

    // Category for a type; nullopt when the type is unmapped.
    std::optional<std::string> category_of(const std::string& activity_type) const;

    // Distinct categories in first-appearance order.
    std::vector<std::string> categories() const;
};

// The canonical mapping names.
const std::vector<std::string>& mapping_names();  // FSLM, FSLSM, OLS, VARK

// Parses the documented mapping format: optional "# source: ..." annotation
// lines, then a header "activity_type,category", then one entry per line.
ActivityMapping parse_mapping(const std::string& text, const std::string& name);

// Loads a named mapping. When mapping_dir is given, reads <dir>/<name>.csv
// (lowercase file name); otherwise uses the compiled-in default tables.
// Unknown name -> SpecError.
ActivityMapping load_mapping(const std::string& name,
                             const std::optional<std::filesystem::path>& mapping_dir = {});

// Raw text of the compiled-in default for a canonical name; SpecError when
// unknown. Kept byte-identical to the shipped data/mappings assets.
const std::string& builtin_mapping_text(const std::string& name);

}  // namespace oulad
