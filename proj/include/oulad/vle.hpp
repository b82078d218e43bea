#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oulad/cohort.hpp"
#include "oulad/flat.hpp"
#include "oulad/mappings.hpp"
#include "oulad/tables.hpp"

namespace oulad {

// Student-by-bucket click table. Buckets are day numbers, week labels,
// activity types, or mapped categories; cells hold summed (or converted)
// click counts. Rows are sorted by numeric student id.
struct ClickMatrix {
    std::vector<std::string> columns;  // bucket labels, student key excluded
    std::vector<StudentId> students;
    std::vector<std::vector<double>> cells;  // students x columns

    double total() const;
    FlatTable to_flat() const;  // id_student + bucket columns

    friend bool operator==(const ClickMatrix&, const ClickMatrix&) = default;
};

enum class ClickFormat { total, binary, standardise1, standardise2, logarithmic };
const char* to_string(ClickFormat f);
ClickFormat click_format_from(const std::string& s);  // throws SpecError

struct VleExtract {
    std::vector<StudentVleRow> filtered;
    WeekRange requested;
    std::optional<WeekRange> effective;  // min/max week present; nullopt when empty

    std::string module;
    std::string presentation;
    RepeatPolicy repeat_students = RepeatPolicy::remove;
};

// Clickstream rows for one pair inside day_window(window), repeat policy
// applied. The effective window is computed from the surviving rows.
VleExtract vle_filtered(const ModulePresentation& pair, const RawTables& raw,
                        const WeekRange& window, RepeatPolicy repeat_policy);

// Cell (s, d) = clicks of student s on day d. Day columns run from the first
// observed day through the last day of the effective final week.
ClickMatrix pivot_daily(const VleExtract& extract);

// Cell (s, w) = clicks of student s in week w, columns spanning the
// effective week range.
ClickMatrix pivot_weekly(const VleExtract& extract);

// Cell (s, t) = clicks of student s on sites of activity type t; columns are
// the types present, lexicographic. Unresolvable id_site -> ValidationError.
ClickMatrix pivot_activity(const VleExtract& extract, const RawTables& raw);

// total: identity. binary: cell > 0. standardise1: per-column z-score
// (sample sd, zero-variance columns become zero). standardise2: z-score by
// grand mean and grand sd over all cells. logarithmic: ln(1 + cell).
ClickMatrix convert_clicks(ClickMatrix matrix, ClickFormat format);

struct ClassifiedClicks {
    ClickMatrix matrix;              // columns are mapping categories
    ActivityMapping mapping;         // the mapping that was applied
    std::vector<std::string> warnings;  // unmapped activity types
};

// Collapses an activity matrix onto the mapping's categories, in mapping
// order. Activity types absent from the mapping aggregate into a trailing
// "unclassified" column and are reported as warnings.
ClassifiedClicks classify_activities(const ClickMatrix& activity, const ActivityMapping& mapping);

}  // namespace oulad
