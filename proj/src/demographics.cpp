#include "oulad/demographics.hpp"

#include <algorithm>
#include <set>

namespace oulad {
namespace {

Cell text_or_missing(const std::string& s) {
    return s.empty() ? Cell::missing() : Cell::text(s);
}

Cell opt_int_cell(const std::optional<int>& v) {
    return v ? Cell::integer(*v) : Cell::missing();
}

template <typename Row>
std::vector<const Row*> select_rows(const std::vector<Row>& rows,
                                    const std::vector<ModulePresentation>& pairs) {
    std::set<ModulePresentation> wanted(pairs.begin(), pairs.end());
    std::vector<const Row*> out;
    for (const auto& r : rows) {
        if (wanted.count({r.code_module, r.code_presentation})) out.push_back(&r);
    }
    return out;
}

template <typename Row>
void sort_by_student(std::vector<const Row*>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const Row* a, const Row* b) {
        if (a->id_student != b->id_student) return a->id_student < b->id_student;
        if (a->code_module != b->code_module) return a->code_module < b->code_module;
        return a->code_presentation < b->code_presentation;
    });
}

}  // namespace

Extract extract_demographics(const CohortSelector& selector, const RawTables& raw) {
    Extract out;
    out.module = selector.module;
    out.presentation = selector.presentation;
    out.repeat_students = selector.repeat_students;
    out.pairs = resolve_selector(selector, raw);

    auto rows = select_rows(raw.student_info, out.pairs);
    if (selector.repeat_students == RepeatPolicy::remove)
        std::erase_if(rows, [](const StudentInfoRow* s) { return s->num_of_prev_attempts > 0; });
    sort_by_student(rows);

    out.table.columns = {"code_module",       "code_presentation", "id_student",
                         "gender",            "region",            "highest_education",
                         "imd_band",          "age_band",          "num_of_prev_attempts",
                         "studied_credits",   "disability",        "final_result"};
    out.table.rows.reserve(rows.size());
    for (const StudentInfoRow* r : rows) {
        out.table.rows.push_back({Cell::text(r->code_module), Cell::text(r->code_presentation),
                                  Cell::text(r->id_student.str()), Cell::text(r->gender),
                                  text_or_missing(r->region),
                                  text_or_missing(r->highest_education),
                                  text_or_missing(r->imd_band), text_or_missing(r->age_band),
                                  Cell::integer(r->num_of_prev_attempts),
                                  Cell::integer(r->studied_credits),
                                  text_or_missing(r->disability), Cell::text(r->final_result)});
    }
    return out;
}

Extract extract_registration(const CohortSelector& selector, const RawTables& raw) {
    Extract out;
    out.module = selector.module;
    out.presentation = selector.presentation;
    out.repeat_students = selector.repeat_students;
    out.pairs = resolve_selector(selector, raw);

    auto rows = select_rows(raw.student_registration, out.pairs);
    if (selector.repeat_students == RepeatPolicy::remove) {
        // Repeat status lives in studentInfo; drop registrations of students
        // flagged there.
        std::set<std::tuple<std::string, std::string, std::string>> repeats;
        for (const auto& s : raw.student_info) {
            if (s.num_of_prev_attempts > 0)
                repeats.insert({s.code_module, s.code_presentation, s.id_student.str()});
        }
        std::erase_if(rows, [&](const RegistrationRow* r) {
            return repeats.count({r->code_module, r->code_presentation, r->id_student.str()}) > 0;
        });
    }
    sort_by_student(rows);

    out.table.columns = {"code_module", "code_presentation", "id_student", "date_registration",
                         "date_unregistration"};
    out.table.rows.reserve(rows.size());
    for (const RegistrationRow* r : rows) {
        out.table.rows.push_back({Cell::text(r->code_module), Cell::text(r->code_presentation),
                                  Cell::text(r->id_student.str()),
                                  opt_int_cell(r->date_registration),
                                  opt_int_cell(r->date_unregistration)});
    }
    return out;
}

}  // namespace oulad
