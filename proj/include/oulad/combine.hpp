#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oulad/assessment.hpp"
#include "oulad/cohort.hpp"
#include "oulad/flat.hpp"
#include "oulad/tables.hpp"
#include "oulad/vle.hpp"

namespace oulad {

enum class VleMode { omit, daily, weekly, activity, fslm, fslsm, ols, vark };
const char* to_string(VleMode m);
VleMode vle_mode_from(const std::string& s);  // throws SpecError
bool is_classified(VleMode m);
// Mapping name for a classification mode ("FSLM" for fslm, ...).
std::string mapping_name_of(VleMode m);

// Which data categories go into the flat table and how. Week window
// defaults to (-4, 39), the span of every published presentation.
struct CombineSpec {
    CohortSelector selector;
    WithdrawnPolicy withdrawn_students = WithdrawnPolicy::keep;
    bool demographics = false;
    bool registration = false;
    bool assessment = false;
    VleMode vle = VleMode::omit;
    ClickFormat clicks = ClickFormat::total;
    NaPolicy na_policy = NaPolicy::zero;
    bool include_reactivity = false;
    std::optional<std::filesystem::path> mapping_dir;
    unsigned threads = 0;  // 0 = one per pair up to hardware concurrency
};

struct CombineResult {
    FlatTable table;
    std::vector<ModulePresentation> pairs;
    RepeatPolicy repeat_students = RepeatPolicy::remove;  // after the All rule
    std::optional<WeekRange> effective;  // union over pairs; set when vle used
    std::vector<std::string> warnings;
};

// Builds the one-row-per-student table: per resolved pair, assembles every
// requested category, applies the withdrawn policy at week_end, and keeps
// the students present in all requested categories. Multi-pair results are
// concatenated with aligned columns (missing where a pair lacks a column)
// and gain code_module/code_presentation key columns.
CombineResult combined_dataset(const CombineSpec& spec, const RawTables& raw);

struct DeriveSpec {
    std::string name;
    std::vector<std::string> sources;  // summed; any missing source -> missing
};

// Column algebra over a flat table: derived sums are appended, renames
// applied, then the keep list projects columns (empty keep = keep all).
// Unknown column names -> SpecError.
FlatTable select_features(const FlatTable& table, const std::vector<std::string>& keep,
                          const std::vector<DeriveSpec>& derive = {},
                          const std::map<std::string, std::string>& rename = {});

}  // namespace oulad
