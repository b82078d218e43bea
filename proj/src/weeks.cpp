#include "oulad/weeks.hpp"

#include "oulad/errors.hpp"

namespace oulad {
namespace {

void check_week_index(int week) {
    if (week == 0) {
        throw SpecError(
            "week index 0 does not exist: weeks run ..., -2, -1 (pre-module), 1, 2, ... "
            "with day 0 in Week 1");
    }
}

}  // namespace

int week_of_day(int day) {
    if (day >= 0) return day / 7 + 1;
    return -((-day + 6) / 7);
}

std::string week_name(int week) {
    check_week_index(week);
    if (week < 0) return "Week_pre-" + std::to_string(-week);
    return "Week" + std::to_string(week);
}

int first_day_of_week(int week) {
    check_week_index(week);
    return week >= 1 ? 7 * (week - 1) : 7 * week;
}

int last_day_of_week(int week) {
    check_week_index(week);
    return week >= 1 ? 7 * week - 1 : 7 * week + 6;
}

DayRange day_window(int week_begin, int week_end) {
    check_week_index(week_begin);
    check_week_index(week_end);
    if (week_begin > week_end) {
        throw SpecError("week_begin " + std::to_string(week_begin) + " exceeds week_end " +
                        std::to_string(week_end));
    }
    return {first_day_of_week(week_begin), last_day_of_week(week_end)};
}

std::vector<int> weeks_in_range(int week_begin, int week_end) {
    check_week_index(week_begin);
    check_week_index(week_end);
    std::vector<int> out;
    for (int w = week_begin; w <= week_end; ++w) {
        if (w == 0) continue;
        out.push_back(w);
    }
    return out;
}

}  // namespace oulad
