#pragma once

#include <optional>
#include <vector>

#include "oulad/cohort.hpp"
#include "oulad/flat.hpp"
#include "oulad/tables.hpp"

namespace oulad {

enum class NaPolicy { zero, drop };
const char* to_string(NaPolicy p);
NaPolicy na_policy_from(const std::string& s);  // throws SpecError

// One scheduled assessment with its due week. Missing due dates are imputed
// as the presentation length, so every row carries an effective due day.
struct ScheduleRow {
    std::string code_module;
    std::string code_presentation;
    int id_assessment = 0;
    std::string assessment_type;
    std::optional<int> date;  // as published
    double weight = 0.0;
    int effective_due = 0;
    int week = 0;

    friend bool operator==(const ScheduleRow&, const ScheduleRow&) = default;
};

// studentAssessment joined with its schedule row plus the derived reactivity.
struct AssessmentDataRow {
    int id_assessment = 0;
    StudentId id_student;
    int date_submitted = 0;
    bool is_banked = false;
    std::optional<double> score;
    std::string code_module;
    std::string code_presentation;
    std::string assessment_type;
    std::optional<int> date;
    double weight = 0.0;
    std::optional<int> reactivity;

    friend bool operator==(const AssessmentDataRow&, const AssessmentDataRow&) = default;
};

struct AssessmentBundle {
    std::vector<AssessmentDataRow> data;  // windowed long rows
    std::vector<ScheduleRow> schedule;    // full, unwindowed
    FlatTable performance;
    FlatTable reactivity;

    std::string module;
    std::string presentation;
    RepeatPolicy repeat_students = RepeatPolicy::remove;
    NaPolicy na_policy = NaPolicy::zero;
    WeekRange window;
    std::vector<ModulePresentation> pairs;
};

// Full schedule for one pair, ordered by effective due date then id.
std::vector<ScheduleRow> assessment_schedule(const ModulePresentation& pair,
                                             const RawTables& raw);

// Long rows for one pair restricted to assessments due inside the window.
std::vector<AssessmentDataRow> assessment_rows(const ModulePresentation& pair,
                                               const RawTables& raw, const WeekRange& window,
                                               RepeatPolicy repeat_policy);

// date_due - date_submitted; negative means overdue.
inline int compute_reactivity(int date_due, int date_submitted) {
    return date_due - date_submitted;
}

// Weighted average of continuous-assessment items. zero: missing scores count
// as 0 and every weight stays in the denominator. drop: missing items are
// removed along with their weights; no items left -> missing.
std::optional<double> weighted_ca_score(
    const std::vector<std::pair<std::optional<double>, double>>& items, NaPolicy policy);

// Student x assessment score matrix for a single pair. Columns are windowed
// assessment ids by due date ascending, then average_CA_score over the CA
// (non-Exam) columns.
FlatTable performance_matrix(const std::vector<AssessmentDataRow>& data,
                             const std::vector<ScheduleRow>& schedule, const WeekRange& window,
                             NaPolicy policy);

// Same shape, cells are reactivity values, no aggregate column.
FlatTable reactivity_matrix(const std::vector<AssessmentDataRow>& data,
                            const std::vector<ScheduleRow>& schedule, const WeekRange& window);

// The four assessment outputs for a resolved selector. Multi-pair selections
// concatenate rows; the matrices gain code_module/code_presentation key
// columns and omit average_CA_score (it is defined per presentation).
AssessmentBundle extract_assessment(const CohortSelector& selector, const RawTables& raw,
                                    NaPolicy policy);

}  // namespace oulad
