#pragma once

#include <string>
#include <vector>

namespace oulad {

// Semester weeks are indexed by nonzero integers: ..., -2, -1 (pre-module),
// 1, 2, ... (teaching weeks). There is no week 0. Day 0, the start of the
// teaching semester, falls in Week 1:
//
//   Week n  (n >= 1) covers days [7(n-1), 7n-1]
//   pre-k   (k >= 1) covers days [-7k, -7k+6]      (index -k)
//
// Labels render as "Week3" and "Week_pre-2".

struct DayRange {
    int first;
    int last;
};

struct WeekRange {
    int begin = -4;
    int end = 39;
};

int week_of_day(int day);

// Throws SpecError for week index 0.
std::string week_name(int week);
int first_day_of_week(int week);
int last_day_of_week(int week);

// Inclusive day span of weeks [week_begin, week_end]. Throws SpecError when
// either index is 0 or the range is reversed.
DayRange day_window(int week_begin, int week_end);

// Week indices from begin to end inclusive, skipping 0.
std::vector<int> weeks_in_range(int week_begin, int week_end);

}  // namespace oulad
