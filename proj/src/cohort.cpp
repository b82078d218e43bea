#include "oulad/cohort.hpp"

#include <algorithm>
#include <set>

#include "oulad/errors.hpp"

namespace oulad {

const char* to_string(RepeatPolicy p) {
    return p == RepeatPolicy::remove ? "remove" : "keep";
}

const char* to_string(WithdrawnPolicy p) {
    return p == WithdrawnPolicy::remove ? "remove" : "keep";
}

RepeatPolicy repeat_policy_from(const std::string& s) {
    if (s == "remove") return RepeatPolicy::remove;
    if (s == "keep") return RepeatPolicy::keep;
    throw SpecError("repeat policy must be 'remove' or 'keep', got '" + s + "'");
}

WithdrawnPolicy withdrawn_policy_from(const std::string& s) {
    if (s == "remove") return WithdrawnPolicy::remove;
    if (s == "keep") return WithdrawnPolicy::keep;
    throw SpecError("withdrawn policy must be 'remove' or 'keep', got '" + s + "'");
}

std::vector<ModulePresentation> resolve_selector(const CohortSelector& selector,
                                                 const RawTables& raw) {
    const bool all_modules = selector.module == "All";
    const bool all_presentations = selector.presentation == "All";

    if (!all_modules && !all_presentations) {
        if (!raw.has_course(selector.module, selector.presentation)) {
            throw SelectionError("no such module presentation: " + selector.module + " " +
                                 selector.presentation);
        }
        return {{selector.module, selector.presentation}};
    }

    std::set<ModulePresentation> matches;
    for (const auto& c : raw.courses) {
        if (!all_modules && c.code_module != selector.module) continue;
        if (!all_presentations && c.code_presentation != selector.presentation) continue;
        matches.insert({c.code_module, c.code_presentation});
    }
    if (matches.empty()) {
        throw SelectionError("selection matches no course: module " + selector.module +
                             ", presentation " + selector.presentation);
    }
    return {matches.begin(), matches.end()};
}

std::vector<StudentInfoRow> apply_repeat_policy(std::vector<StudentInfoRow> students,
                                                RepeatPolicy policy) {
    if (policy == RepeatPolicy::keep) return students;
    std::erase_if(students, [](const StudentInfoRow& s) { return s.num_of_prev_attempts > 0; });
    return students;
}

bool withdrawn_before(const std::optional<int>& date_unregistration, int week_end) {
    return date_unregistration && *date_unregistration <= last_day_of_week(week_end);
}

}  // namespace oulad
