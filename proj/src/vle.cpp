#include "oulad/vle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>

#include "oulad/errors.hpp"
#include "oulad/weeks.hpp"

namespace oulad {
namespace {

// Accumulates one row per student over an ordered bucket set.
ClickMatrix build_matrix(const std::vector<StudentId>& students,
                         const std::vector<std::string>& columns) {
    ClickMatrix m;
    m.columns = columns;
    m.students = students;
    m.cells.assign(students.size(), std::vector<double>(columns.size(), 0.0));
    return m;
}

std::vector<StudentId> sorted_students(const std::vector<StudentVleRow>& rows) {
    std::set<StudentId> seen;
    for (const auto& r : rows) seen.insert(r.id_student);
    return {seen.begin(), seen.end()};
}

std::unordered_map<std::string, std::size_t> index_of_student(
    const std::vector<StudentId>& students) {
    std::unordered_map<std::string, std::size_t> idx;
    idx.reserve(students.size());
    for (std::size_t i = 0; i < students.size(); ++i) idx.emplace(students[i].str(), i);
    return idx;
}

}  // namespace

double ClickMatrix::total() const {
    double sum = 0.0;
    for (const auto& row : cells) {
        for (double c : row) sum += c;
    }
    return sum;
}

FlatTable ClickMatrix::to_flat() const {
    FlatTable t;
    t.columns.reserve(columns.size() + 1);
    t.columns.push_back("id_student");
    t.columns.insert(t.columns.end(), columns.begin(), columns.end());
    t.rows.reserve(students.size());
    for (std::size_t i = 0; i < students.size(); ++i) {
        std::vector<Cell> row;
        row.reserve(columns.size() + 1);
        row.push_back(Cell::text(students[i].str()));
        for (double c : cells[i]) {
            double integral;
            if (std::modf(c, &integral) == 0.0 && std::abs(c) < 9.0e15)
                row.push_back(Cell::integer(static_cast<long long>(c)));
            else
                row.push_back(Cell::real(c));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

const char* to_string(ClickFormat f) {
    switch (f) {
        case ClickFormat::total: return "total";
        case ClickFormat::binary: return "binary";
        case ClickFormat::standardise1: return "standardise1";
        case ClickFormat::standardise2: return "standardise2";
        case ClickFormat::logarithmic: return "logarithmic";
    }
    return "total";
}

ClickFormat click_format_from(const std::string& s) {
    if (s == "total") return ClickFormat::total;
    if (s == "binary") return ClickFormat::binary;
    if (s == "standardise1") return ClickFormat::standardise1;
    if (s == "standardise2") return ClickFormat::standardise2;
    if (s == "logarithmic") return ClickFormat::logarithmic;
    throw SpecError(
        "clicks format must be one of total, binary, standardise1, standardise2, logarithmic; "
        "got '" +
        s + "'");
}

VleExtract vle_filtered(const ModulePresentation& pair, const RawTables& raw,
                        const WeekRange& window, RepeatPolicy repeat_policy) {
    VleExtract out;
    out.module = pair.first;
    out.presentation = pair.second;
    out.repeat_students = repeat_policy;
    out.requested = window;

    if (!raw.has_course(pair.first, pair.second))
        throw SelectionError("no such module presentation: " + pair.first + " " + pair.second);

    const DayRange days = day_window(window.begin, window.end);

    std::set<StudentId> repeats;
    if (repeat_policy == RepeatPolicy::remove) {
        for (const auto& s : raw.student_info) {
            if (s.code_module == pair.first && s.code_presentation == pair.second &&
                s.num_of_prev_attempts > 0)
                repeats.insert(s.id_student);
        }
    }

    int min_week = 0;
    int max_week = 0;
    for (const auto& r : raw.student_vle) {
        if (r.code_module != pair.first || r.code_presentation != pair.second) continue;
        if (r.date < days.first || r.date > days.last) continue;
        if (!repeats.empty() && repeats.count(r.id_student)) continue;
        out.filtered.push_back(r);
        int w = week_of_day(r.date);
        if (out.filtered.size() == 1) {
            min_week = max_week = w;
        } else {
            min_week = std::min(min_week, w);
            max_week = std::max(max_week, w);
        }
    }
    if (!out.filtered.empty()) out.effective = WeekRange{min_week, max_week};
    return out;
}

ClickMatrix pivot_daily(const VleExtract& extract) {
    if (extract.filtered.empty()) return {};

    int min_day = extract.filtered.front().date;
    for (const auto& r : extract.filtered) min_day = std::min(min_day, r.date);
    const int max_day = last_day_of_week(extract.effective->end);

    std::vector<std::string> columns;
    for (int d = min_day; d <= max_day; ++d) columns.push_back(std::to_string(d));

    auto students = sorted_students(extract.filtered);
    ClickMatrix m = build_matrix(students, columns);
    auto idx = index_of_student(students);
    for (const auto& r : extract.filtered)
        m.cells[idx[r.id_student.str()]][static_cast<std::size_t>(r.date - min_day)] +=
            r.sum_click;
    return m;
}

ClickMatrix pivot_weekly(const VleExtract& extract) {
    if (extract.filtered.empty()) return {};

    const auto weeks = weeks_in_range(extract.effective->begin, extract.effective->end);
    std::map<int, std::size_t> col_of;
    std::vector<std::string> columns;
    for (int w : weeks) {
        col_of[w] = columns.size();
        columns.push_back(week_name(w));
    }

    auto students = sorted_students(extract.filtered);
    ClickMatrix m = build_matrix(students, columns);
    auto idx = index_of_student(students);
    for (const auto& r : extract.filtered)
        m.cells[idx[r.id_student.str()]][col_of[week_of_day(r.date)]] += r.sum_click;
    return m;
}

ClickMatrix pivot_activity(const VleExtract& extract, const RawTables& raw) {
    if (extract.filtered.empty()) return {};

    std::unordered_map<int, const std::string*> type_of;
    for (const auto& site : raw.vle) type_of.emplace(site.id_site, &site.activity_type);

    std::set<std::string> types;
    for (const auto& r : extract.filtered) {
        auto it = type_of.find(r.id_site);
        if (it == type_of.end())
            throw ValidationError("studentVle references unknown id_site " +
                                  std::to_string(r.id_site));
        types.insert(*it->second);
    }

    std::vector<std::string> columns(types.begin(), types.end());
    std::map<std::string, std::size_t> col_of;
    for (std::size_t i = 0; i < columns.size(); ++i) col_of[columns[i]] = i;

    auto students = sorted_students(extract.filtered);
    ClickMatrix m = build_matrix(students, columns);
    auto idx = index_of_student(students);
    for (const auto& r : extract.filtered)
        m.cells[idx[r.id_student.str()]][col_of[*type_of[r.id_site]]] += r.sum_click;
    return m;
}

ClickMatrix convert_clicks(ClickMatrix matrix, ClickFormat format) {
    const std::size_t n_rows = matrix.cells.size();
    const std::size_t n_cols = matrix.columns.size();

    switch (format) {
        case ClickFormat::total:
            break;
        case ClickFormat::binary:
            for (auto& row : matrix.cells) {
                for (double& c : row) c = c > 0.0 ? 1.0 : 0.0;
            }
            break;
        case ClickFormat::logarithmic:
            for (auto& row : matrix.cells) {
                for (double& c : row) c = std::log1p(c);
            }
            break;
        case ClickFormat::standardise1: {
            if (n_rows == 0) break;
            for (std::size_t j = 0; j < n_cols; ++j) {
                double mean = 0.0;
                for (std::size_t i = 0; i < n_rows; ++i) mean += matrix.cells[i][j];
                mean /= static_cast<double>(n_rows);
                double ss = 0.0;
                for (std::size_t i = 0; i < n_rows; ++i) {
                    double d = matrix.cells[i][j] - mean;
                    ss += d * d;
                }
                double sd = n_rows > 1 ? std::sqrt(ss / static_cast<double>(n_rows - 1)) : 0.0;
                for (std::size_t i = 0; i < n_rows; ++i) {
                    matrix.cells[i][j] = sd > 0.0 ? (matrix.cells[i][j] - mean) / sd : 0.0;
                }
            }
            break;
        }
        case ClickFormat::standardise2: {
            const std::size_t n = n_rows * n_cols;
            if (n == 0) break;
            double mean = 0.0;
            for (const auto& row : matrix.cells) {
                for (double c : row) mean += c;
            }
            mean /= static_cast<double>(n);
            double ss = 0.0;
            for (const auto& row : matrix.cells) {
                for (double c : row) {
                    double d = c - mean;
                    ss += d * d;
                }
            }
            double sd = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
            for (auto& row : matrix.cells) {
                for (double& c : row) c = sd > 0.0 ? (c - mean) / sd : 0.0;
            }
            break;
        }
    }
    return matrix;
}

ClassifiedClicks classify_activities(const ClickMatrix& activity,
                                     const ActivityMapping& mapping) {
    ClassifiedClicks out;
    out.mapping = mapping;

    std::vector<std::string> columns = mapping.categories();
    auto category_index = [&](const std::string& category) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (columns[i] == category) return i;
        }
        columns.push_back(category);
        return columns.size() - 1;
    };

    // Resolve each activity column to a category column. Unmapped types get
    // a trailing "unclassified" column (created on first use).
    std::vector<std::size_t> target(activity.columns.size());
    for (std::size_t j = 0; j < activity.columns.size(); ++j) {
        auto category = mapping.category_of(activity.columns[j]);
        if (!category) {
            out.warnings.push_back("activity type '" + activity.columns[j] +
                                   "' is not in mapping " + mapping.name +
                                   "; counted as unclassified");
            category = "unclassified";
        }
        target[j] = category_index(*category);
    }

    ClickMatrix m;
    m.columns = columns;
    m.students = activity.students;
    m.cells.assign(activity.students.size(), std::vector<double>(m.columns.size(), 0.0));
    for (std::size_t i = 0; i < activity.cells.size(); ++i) {
        for (std::size_t j = 0; j < activity.columns.size(); ++j)
            m.cells[i][target[j]] += activity.cells[i][j];
    }
    out.matrix = std::move(m);
    return out;
}

}  // namespace oulad
