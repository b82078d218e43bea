#include "oulad/tables.hpp"

#include <algorithm>

namespace oulad {

bool RawTables::has_course(const std::string& module, const std::string& presentation) const {
    return find_course(module, presentation) != nullptr;
}

const CourseRow* RawTables::find_course(const std::string& module,
                                        const std::string& presentation) const {
    auto it = std::find_if(courses.begin(), courses.end(), [&](const CourseRow& c) {
        return c.code_module == module && c.code_presentation == presentation;
    });
    return it == courses.end() ? nullptr : &*it;
}

std::vector<ModulePresentation> RawTables::course_pairs() const {
    std::vector<ModulePresentation> pairs;
    pairs.reserve(courses.size());
    for (const auto& c : courses) pairs.emplace_back(c.code_module, c.code_presentation);
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

}  // namespace oulad
