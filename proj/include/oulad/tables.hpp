#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oulad/student_id.hpp"

namespace oulad {

using ModulePresentation = std::pair<std::string, std::string>;

struct CourseRow {
    std::string code_module;
    std::string code_presentation;
    int module_presentation_length = 0;  // days

    friend bool operator==(const CourseRow&, const CourseRow&) = default;
};

struct AssessmentRow {
    std::string code_module;
    std::string code_presentation;
    int id_assessment = 0;
    std::string assessment_type;  // TMA | CMA | Exam
    std::optional<int> date;      // due day offset
    double weight = 0.0;          // 0..100

    friend bool operator==(const AssessmentRow&, const AssessmentRow&) = default;
};

struct VleSiteRow {
    int id_site = 0;
    std::string code_module;
    std::string code_presentation;
    std::string activity_type;
    std::optional<int> week_from;
    std::optional<int> week_to;

    friend bool operator==(const VleSiteRow&, const VleSiteRow&) = default;
};

struct StudentInfoRow {
    std::string code_module;
    std::string code_presentation;
    StudentId id_student;
    std::string gender;
    std::string region;
    std::string highest_education;
    std::string imd_band;  // empty when missing
    std::string age_band;
    int num_of_prev_attempts = 0;
    int studied_credits = 0;
    std::string disability;
    std::string final_result;  // Distinction | Pass | Fail | Withdrawn

    friend bool operator==(const StudentInfoRow&, const StudentInfoRow&) = default;
};

struct RegistrationRow {
    std::string code_module;
    std::string code_presentation;
    StudentId id_student;
    std::optional<int> date_registration;
    std::optional<int> date_unregistration;

    friend bool operator==(const RegistrationRow&, const RegistrationRow&) = default;
};

struct StudentAssessmentRow {
    int id_assessment = 0;
    StudentId id_student;
    int date_submitted = 0;
    bool is_banked = false;
    std::optional<double> score;  // 0..100

    friend bool operator==(const StudentAssessmentRow&, const StudentAssessmentRow&) = default;
};

struct StudentVleRow {
    std::string code_module;
    std::string code_presentation;
    StudentId id_student;
    int id_site = 0;
    int date = 0;
    int sum_click = 0;

    friend bool operator==(const StudentVleRow&, const StudentVleRow&) = default;
};

// The seven OULAD relations after parsing. Immutable once built; safe to
// share read-only across threads.
struct RawTables {
    std::vector<CourseRow> courses;
    std::vector<AssessmentRow> assessments;
    std::vector<VleSiteRow> vle;
    std::vector<StudentInfoRow> student_info;
    std::vector<RegistrationRow> student_registration;
    std::vector<StudentAssessmentRow> student_assessment;
    std::vector<StudentVleRow> student_vle;

    bool has_course(const std::string& module, const std::string& presentation) const;
    const CourseRow* find_course(const std::string& module, const std::string& presentation) const;

    // All (module, presentation) pairs present in courses, sorted.
    std::vector<ModulePresentation> course_pairs() const;

    friend bool operator==(const RawTables&, const RawTables&) = default;
};

}  // namespace oulad
