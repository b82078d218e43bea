#pragma once

#include "oulad/cohort.hpp"
#include "oulad/flat.hpp"
#include "oulad/tables.hpp"

namespace oulad {

// Extract output plus the resolved parameters it was built with, mirrored
// into every emitted metadata sidecar.
struct Extract {
    FlatTable table;
    std::string module;
    std::string presentation;
    RepeatPolicy repeat_students = RepeatPolicy::remove;
    std::vector<ModulePresentation> pairs;
};

// studentInfo rows for the resolved pairs, repeat policy applied, columns
// passed through unchanged. Sorted by numeric id_student, then module, then
// presentation.
Extract extract_demographics(const CohortSelector& selector, const RawTables& raw);

// studentRegistration rows under the same selection rules.
Extract extract_registration(const CohortSelector& selector, const RawTables& raw);

}  // namespace oulad
