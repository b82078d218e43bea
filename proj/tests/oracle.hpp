#pragma once

// Brute-force reference computations for checking the library against an
// implementation that shares no code with it. Everything here favors plain
// loops and maps over cleverness; speed does not matter at test scale.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "oulad/tables.hpp"

namespace oracle {

// Week holding a day, found by walking 7-day blocks away from day zero.
inline int week_of_day(int day) {
    if (day >= 0) {
        int week = 1;
        int lo = 0;
        while (!(day >= lo && day <= lo + 6)) {
            lo += 7;
            ++week;
        }
        return week;
    }
    int week = -1;
    int hi = -1;
    while (!(day <= hi && day >= hi - 6)) {
        hi -= 7;
        --week;
    }
    return week;
}

// Weeks ordered ...,-2,-1,1,2,... with no zero; ordinal removes the gap.
inline int week_ordinal(int week) { return week > 0 ? week : week + 1; }

inline bool week_in_range(int week, int begin, int end) {
    return week_ordinal(begin) <= week_ordinal(week) && week_ordinal(week) <= week_ordinal(end);
}

inline std::string week_label(int week) {
    if (week > 0) return "Week" + std::to_string(week);
    return "Week_pre-" + std::to_string(-week);
}

// Largest day still inside the given week, found by scanning upward.
inline int last_day_of_week(int week) {
    int day = week > 0 ? 7 * week + 6 : -7 * -week + 13;  // start past the block
    while (week_of_day(day) != week) --day;
    return day;
}

using StudentKey = std::string;  // decimal id, as stored in the tables

inline std::set<StudentKey> repeat_students(const oulad::RawTables& raw, const std::string& mod,
                                            const std::string& pres) {
    std::set<StudentKey> out;
    for (const auto& s : raw.student_info)
        if (s.code_module == mod && s.code_presentation == pres && s.num_of_prev_attempts > 0)
            out.insert(s.id_student.str());
    return out;
}

struct FilteredClicks {
    std::vector<oulad::StudentVleRow> rows;
    std::optional<int> effective_begin;
    std::optional<int> effective_end;
};

inline FilteredClicks filter_clicks(const oulad::RawTables& raw, const std::string& mod,
                                    const std::string& pres, int week_begin, int week_end,
                                    bool remove_repeats) {
    auto repeats = repeat_students(raw, mod, pres);
    FilteredClicks out;
    for (const auto& r : raw.student_vle) {
        if (r.code_module != mod || r.code_presentation != pres) continue;
        if (remove_repeats && repeats.count(r.id_student.str())) continue;
        int week = week_of_day(r.date);
        if (!week_in_range(week, week_begin, week_end)) continue;
        out.rows.push_back(r);
        if (!out.effective_begin ||
            week_ordinal(week) < week_ordinal(*out.effective_begin))
            out.effective_begin = week;
        if (!out.effective_end || week_ordinal(week) > week_ordinal(*out.effective_end))
            out.effective_end = week;
    }
    return out;
}

// student -> bucket -> clicks, for each of the three pivots.
inline std::map<StudentKey, std::map<int, long long>> daily_cells(const FilteredClicks& f) {
    std::map<StudentKey, std::map<int, long long>> out;
    for (const auto& r : f.rows) out[r.id_student.str()][r.date] += r.sum_click;
    return out;
}

inline std::map<StudentKey, std::map<int, long long>> weekly_cells(const FilteredClicks& f) {
    std::map<StudentKey, std::map<int, long long>> out;
    for (const auto& r : f.rows) out[r.id_student.str()][week_of_day(r.date)] += r.sum_click;
    return out;
}

inline std::map<StudentKey, std::map<std::string, long long>> activity_cells(
    const FilteredClicks& f, const oulad::RawTables& raw) {
    std::map<StudentKey, std::map<std::string, long long>> out;
    for (const auto& r : f.rows) {
        std::string type;
        for (const auto& site : raw.vle)
            if (site.id_site == r.id_site) type = site.activity_type;
        out[r.id_student.str()][type] += r.sum_click;
    }
    return out;
}

// Schedule of one pair: (id, type, published date, weight, effective due),
// due dates imputed as the presentation length when unpublished.
struct OracleAssessment {
    int id = 0;
    std::string type;
    std::optional<int> date;
    double weight = 0.0;
    int effective_due = 0;
};

inline std::vector<OracleAssessment> schedule(const oulad::RawTables& raw, const std::string& mod,
                                              const std::string& pres) {
    int length = 0;
    for (const auto& c : raw.courses)
        if (c.code_module == mod && c.code_presentation == pres)
            length = c.module_presentation_length;
    std::vector<OracleAssessment> out;
    for (const auto& a : raw.assessments) {
        if (a.code_module != mod || a.code_presentation != pres) continue;
        OracleAssessment o;
        o.id = a.id_assessment;
        o.type = a.assessment_type;
        o.date = a.date;
        o.weight = a.weight;
        o.effective_due = a.date ? *a.date : length;
        out.push_back(o);
    }
    // due day, then id: the ordering the outputs promise
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (std::tie(out[j].effective_due, out[j].id) <
                std::tie(out[i].effective_due, out[i].id))
                std::swap(out[i], out[j]);
    return out;
}

inline std::vector<OracleAssessment> windowed_schedule(const oulad::RawTables& raw,
                                                       const std::string& mod,
                                                       const std::string& pres, int week_begin,
                                                       int week_end) {
    std::vector<OracleAssessment> out;
    for (const auto& a : schedule(raw, mod, pres))
        if (week_in_range(week_of_day(a.effective_due), week_begin, week_end)) out.push_back(a);
    return out;
}

// Submissions joined to the windowed schedule, repeat policy applied.
struct OracleSubmission {
    StudentKey student;
    int id_assessment = 0;
    std::optional<double> score;
    std::optional<int> reactivity;
};

inline std::vector<OracleSubmission> submissions(const oulad::RawTables& raw,
                                                 const std::string& mod, const std::string& pres,
                                                 int week_begin, int week_end,
                                                 bool remove_repeats) {
    auto repeats = repeat_students(raw, mod, pres);
    auto window = windowed_schedule(raw, mod, pres, week_begin, week_end);
    std::vector<OracleSubmission> out;
    for (const auto& s : raw.student_assessment) {
        const OracleAssessment* hit = nullptr;
        for (const auto& a : window)
            if (a.id == s.id_assessment) hit = &a;
        if (!hit) continue;
        if (remove_repeats && repeats.count(s.id_student.str())) continue;
        OracleSubmission o;
        o.student = s.id_student.str();
        o.id_assessment = s.id_assessment;
        o.score = s.score;
        if (hit->date) o.reactivity = *hit->date - s.date_submitted;
        out.push_back(o);
    }
    return out;
}

// Weighted CA average in schedule order; nullopt when nothing is averageable.
inline std::optional<double> ca_average(const std::vector<OracleAssessment>& window,
                                        const std::map<int, std::optional<double>>& scores,
                                        bool drop_missing) {
    double num = 0.0;
    double den = 0.0;
    for (const auto& a : window) {
        if (a.type == "Exam") continue;
        auto it = scores.find(a.id);
        bool have = it != scores.end() && it->second.has_value();
        if (drop_missing) {
            if (!have) continue;
            num += *it->second * a.weight;
            den += a.weight;
        } else {
            if (have) num += *it->second * a.weight;
            den += a.weight;
        }
    }
    if (den <= 0.0) return std::nullopt;
    return num / den;
}

// First-submission-wins score lookup per student, mirroring the dedup rule.
inline std::map<StudentKey, std::map<int, std::optional<double>>> score_table(
    const std::vector<OracleSubmission>& subs) {
    std::map<StudentKey, std::map<int, std::optional<double>>> out;
    for (const auto& s : subs)
        if (!out[s.student].count(s.id_assessment)) out[s.student][s.id_assessment] = s.score;
    return out;
}

// Student sets behind each combinable category, for intersection checks.
inline std::set<StudentKey> demographic_students(const oulad::RawTables& raw,
                                                 const std::string& mod, const std::string& pres,
                                                 bool remove_repeats) {
    std::set<StudentKey> out;
    for (const auto& s : raw.student_info)
        if (s.code_module == mod && s.code_presentation == pres &&
            !(remove_repeats && s.num_of_prev_attempts > 0))
            out.insert(s.id_student.str());
    return out;
}

inline std::set<StudentKey> registration_students(const oulad::RawTables& raw,
                                                  const std::string& mod, const std::string& pres,
                                                  bool remove_repeats) {
    auto repeats = repeat_students(raw, mod, pres);
    std::set<StudentKey> out;
    for (const auto& r : raw.student_registration)
        if (r.code_module == mod && r.code_presentation == pres &&
            !(remove_repeats && repeats.count(r.id_student.str())))
            out.insert(r.id_student.str());
    return out;
}

inline std::set<StudentKey> assessment_students(const oulad::RawTables& raw,
                                                const std::string& mod, const std::string& pres,
                                                int week_begin, int week_end,
                                                bool remove_repeats) {
    std::set<StudentKey> out;
    for (const auto& s : submissions(raw, mod, pres, week_begin, week_end, remove_repeats))
        out.insert(s.student);
    return out;
}

inline std::set<StudentKey> clicking_students(const oulad::RawTables& raw, const std::string& mod,
                                              const std::string& pres, int week_begin,
                                              int week_end, bool remove_repeats) {
    std::set<StudentKey> out;
    for (const auto& r : filter_clicks(raw, mod, pres, week_begin, week_end, remove_repeats).rows)
        out.insert(r.id_student.str());
    return out;
}

inline std::set<StudentKey> withdrawn_by(const oulad::RawTables& raw, const std::string& mod,
                                         const std::string& pres, int week_end) {
    int cutoff = last_day_of_week(week_end);
    std::set<StudentKey> out;
    for (const auto& r : raw.student_registration)
        if (r.code_module == mod && r.code_presentation == pres && r.date_unregistration &&
            *r.date_unregistration <= cutoff)
            out.insert(r.id_student.str());
    return out;
}

}  // namespace oracle
