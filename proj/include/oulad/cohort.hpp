#pragma once

#include <string>
#include <vector>

#include "oulad/tables.hpp"
#include "oulad/weeks.hpp"

namespace oulad {

enum class RepeatPolicy { remove, keep };
enum class WithdrawnPolicy { remove, keep };

const char* to_string(RepeatPolicy p);
const char* to_string(WithdrawnPolicy p);
RepeatPolicy repeat_policy_from(const std::string& s);        // throws SpecError
WithdrawnPolicy withdrawn_policy_from(const std::string& s);  // throws SpecError

// Module/presentation selection plus the policies shared by all extractors.
// "All" expands against the courses table.
struct CohortSelector {
    std::string module = "All";
    std::string presentation = "All";
    RepeatPolicy repeat_students = RepeatPolicy::remove;
    WeekRange window;
};

// Expands the selector against courses. Explicit pairs must exist; "All"
// expands to whatever courses lists. Result sorted by module, presentation.
// Throws SelectionError naming the pair (or the empty expansion).
std::vector<ModulePresentation> resolve_selector(const CohortSelector& selector,
                                                 const RawTables& raw);

std::vector<StudentInfoRow> apply_repeat_policy(std::vector<StudentInfoRow> students,
                                                RepeatPolicy policy);

// True when the policy says to drop a student who unregistered on day
// `date_unregistration` (missing = still registered) given the window end.
bool withdrawn_before(const std::optional<int>& date_unregistration, int week_end);

}  // namespace oulad
