#include "oulad/assessment.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "oulad/errors.hpp"
#include "oulad/weeks.hpp"

namespace oulad {
namespace {

std::vector<ScheduleRow> windowed_schedule(const std::vector<ScheduleRow>& schedule,
                                           const WeekRange& window) {
    std::vector<ScheduleRow> out;
    for (const auto& s : schedule) {
        if (s.week >= window.begin && s.week <= window.end) out.push_back(s);
    }
    return out;
}

// Sorted distinct students appearing in the long rows.
std::vector<StudentId> matrix_students(const std::vector<AssessmentDataRow>& data) {
    std::set<StudentId> seen;
    for (const auto& r : data) seen.insert(r.id_student);
    return {seen.begin(), seen.end()};
}

Cell opt_real_cell(const std::optional<double>& v) {
    return v ? Cell::real(*v) : Cell::missing();
}

Cell opt_int_cell(const std::optional<int>& v) {
    return v ? Cell::integer(*v) : Cell::missing();
}

}  // namespace

const char* to_string(NaPolicy p) {
    return p == NaPolicy::zero ? "zero" : "drop";
}

NaPolicy na_policy_from(const std::string& s) {
    if (s == "zero") return NaPolicy::zero;
    if (s == "drop") return NaPolicy::drop;
    throw SpecError("na policy must be 'zero' or 'drop', got '" + s + "'");
}

std::vector<ScheduleRow> assessment_schedule(const ModulePresentation& pair,
                                             const RawTables& raw) {
    const CourseRow* course = raw.find_course(pair.first, pair.second);
    if (!course) {
        throw SelectionError("no such module presentation: " + pair.first + " " + pair.second);
    }
    std::vector<ScheduleRow> out;
    for (const auto& a : raw.assessments) {
        if (a.code_module != pair.first || a.code_presentation != pair.second) continue;
        ScheduleRow s;
        s.code_module = a.code_module;
        s.code_presentation = a.code_presentation;
        s.id_assessment = a.id_assessment;
        s.assessment_type = a.assessment_type;
        s.date = a.date;
        s.weight = a.weight;
        s.effective_due = a.date ? *a.date : course->module_presentation_length;
        s.week = week_of_day(s.effective_due);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const ScheduleRow& a, const ScheduleRow& b) {
        if (a.effective_due != b.effective_due) return a.effective_due < b.effective_due;
        return a.id_assessment < b.id_assessment;
    });
    return out;
}

std::vector<AssessmentDataRow> assessment_rows(const ModulePresentation& pair,
                                               const RawTables& raw, const WeekRange& window,
                                               RepeatPolicy repeat_policy) {
    day_window(window.begin, window.end);  // validates the indices

    auto schedule = assessment_schedule(pair, raw);
    std::map<int, const ScheduleRow*> windowed;
    for (const auto& s : schedule) {
        if (s.week >= window.begin && s.week <= window.end) windowed[s.id_assessment] = &s;
    }

    std::set<StudentId> repeats;
    if (repeat_policy == RepeatPolicy::remove) {
        for (const auto& s : raw.student_info) {
            if (s.code_module == pair.first && s.code_presentation == pair.second &&
                s.num_of_prev_attempts > 0)
                repeats.insert(s.id_student);
        }
    }

    std::vector<AssessmentDataRow> out;
    for (const auto& sa : raw.student_assessment) {
        auto it = windowed.find(sa.id_assessment);
        if (it == windowed.end()) continue;
        if (!repeats.empty() && repeats.count(sa.id_student)) continue;
        const ScheduleRow& s = *it->second;
        AssessmentDataRow r;
        r.id_assessment = sa.id_assessment;
        r.id_student = sa.id_student;
        r.date_submitted = sa.date_submitted;
        r.is_banked = sa.is_banked;
        r.score = sa.score;
        r.code_module = s.code_module;
        r.code_presentation = s.code_presentation;
        r.assessment_type = s.assessment_type;
        r.date = s.date;
        r.weight = s.weight;
        if (s.date) r.reactivity = compute_reactivity(*s.date, sa.date_submitted);
        out.push_back(std::move(r));
    }

    std::map<int, int> due_of;
    for (const auto& s : schedule) due_of[s.id_assessment] = s.effective_due;
    std::sort(out.begin(), out.end(), [&](const AssessmentDataRow& a, const AssessmentDataRow& b) {
        if (a.id_student != b.id_student) return a.id_student < b.id_student;
        if (due_of[a.id_assessment] != due_of[b.id_assessment])
            return due_of[a.id_assessment] < due_of[b.id_assessment];
        return a.id_assessment < b.id_assessment;
    });
    return out;
}

std::optional<double> weighted_ca_score(
    const std::vector<std::pair<std::optional<double>, double>>& items, NaPolicy policy) {
    double num = 0.0;
    double den = 0.0;
    for (const auto& [score, weight] : items) {
        if (!score && policy == NaPolicy::drop) continue;
        num += score.value_or(0.0) * weight;
        den += weight;
    }
    if (den <= 0.0) return std::nullopt;
    return num / den;
}

FlatTable performance_matrix(const std::vector<AssessmentDataRow>& data,
                             const std::vector<ScheduleRow>& schedule, const WeekRange& window,
                             NaPolicy policy) {
    auto cols = windowed_schedule(schedule, window);
    FlatTable out;
    out.columns.push_back("id_student");
    for (const auto& s : cols) out.columns.push_back(std::to_string(s.id_assessment));
    out.columns.push_back("average_CA_score");

    std::map<std::pair<StudentId, int>, std::optional<double>> score_of;
    for (const auto& r : data) score_of.emplace(std::pair{r.id_student, r.id_assessment}, r.score);

    for (const auto& student : matrix_students(data)) {
        std::vector<Cell> row;
        row.push_back(Cell::text(student.str()));
        std::vector<std::pair<std::optional<double>, double>> ca_items;
        for (const auto& s : cols) {
            std::optional<double> score;
            if (auto it = score_of.find({student, s.id_assessment}); it != score_of.end())
                score = it->second;
            row.push_back(opt_real_cell(score));
            if (s.assessment_type != "Exam") ca_items.emplace_back(score, s.weight);
        }
        row.push_back(opt_real_cell(weighted_ca_score(ca_items, policy)));
        out.rows.push_back(std::move(row));
    }
    return out;
}

FlatTable reactivity_matrix(const std::vector<AssessmentDataRow>& data,
                            const std::vector<ScheduleRow>& schedule, const WeekRange& window) {
    auto cols = windowed_schedule(schedule, window);
    FlatTable out;
    out.columns.push_back("id_student");
    for (const auto& s : cols) out.columns.push_back(std::to_string(s.id_assessment));

    std::map<std::pair<StudentId, int>, std::optional<int>> reactivity_of;
    for (const auto& r : data)
        reactivity_of.emplace(std::pair{r.id_student, r.id_assessment}, r.reactivity);

    for (const auto& student : matrix_students(data)) {
        std::vector<Cell> row;
        row.push_back(Cell::text(student.str()));
        for (const auto& s : cols) {
            std::optional<int> reactivity;
            if (auto it = reactivity_of.find({student, s.id_assessment});
                it != reactivity_of.end())
                reactivity = it->second;
            row.push_back(opt_int_cell(reactivity));
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

AssessmentBundle extract_assessment(const CohortSelector& selector, const RawTables& raw,
                                    NaPolicy policy) {
    AssessmentBundle bundle;
    bundle.module = selector.module;
    bundle.presentation = selector.presentation;
    bundle.repeat_students = selector.repeat_students;
    bundle.na_policy = policy;
    bundle.window = selector.window;
    bundle.pairs = resolve_selector(selector, raw);

    struct PerPair {
        std::vector<ScheduleRow> schedule;
        std::vector<AssessmentDataRow> data;
    };
    std::vector<PerPair> built;
    for (const auto& pair : bundle.pairs) {
        PerPair p;
        p.schedule = assessment_schedule(pair, raw);
        p.data = assessment_rows(pair, raw, selector.window, selector.repeat_students);
        built.push_back(std::move(p));
    }

    for (auto& p : built) {
        bundle.schedule.insert(bundle.schedule.end(), p.schedule.begin(), p.schedule.end());
        bundle.data.insert(bundle.data.end(), p.data.begin(), p.data.end());
    }

    if (bundle.pairs.size() == 1) {
        bundle.performance =
            performance_matrix(built[0].data, built[0].schedule, selector.window, policy);
        bundle.reactivity = reactivity_matrix(built[0].data, built[0].schedule, selector.window);
        return bundle;
    }

    // Multi-pair: key columns in front, one column block per pair, no
    // average (it is only defined within a single presentation).
    FlatTable perf;
    FlatTable react;
    perf.columns = {"code_module", "code_presentation", "id_student"};
    react.columns = perf.columns;
    std::vector<std::size_t> block_offset;
    for (std::size_t i = 0; i < bundle.pairs.size(); ++i) {
        block_offset.push_back(perf.columns.size());
        for (const auto& s : windowed_schedule(built[i].schedule, selector.window)) {
            perf.columns.push_back(std::to_string(s.id_assessment));
            react.columns.push_back(std::to_string(s.id_assessment));
        }
    }

    for (std::size_t i = 0; i < bundle.pairs.size(); ++i) {
        FlatTable p = performance_matrix(built[i].data, built[i].schedule, selector.window,
                                         policy);
        FlatTable r = reactivity_matrix(built[i].data, built[i].schedule, selector.window);
        const auto& [mod, pres] = bundle.pairs[i];
        const std::size_t block_width = windowed_schedule(built[i].schedule, selector.window).size();
        for (std::size_t row = 0; row < p.rows.size(); ++row) {
            std::vector<Cell> perf_row(perf.columns.size(), Cell::missing());
            std::vector<Cell> react_row(react.columns.size(), Cell::missing());
            perf_row[0] = react_row[0] = Cell::text(mod);
            perf_row[1] = react_row[1] = Cell::text(pres);
            perf_row[2] = react_row[2] = p.rows[row][0];
            for (std::size_t c = 0; c < block_width; ++c) {
                perf_row[block_offset[i] + c] = p.rows[row][1 + c];
                react_row[block_offset[i] + c] = r.rows[row][1 + c];
            }
            perf.rows.push_back(std::move(perf_row));
            react.rows.push_back(std::move(react_row));
        }
    }
    bundle.performance = std::move(perf);
    bundle.reactivity = std::move(react);
    return bundle;
}

}  // namespace oulad
