#include <doctest.h>

#include "oulad/cohort.hpp"
#include "oulad/errors.hpp"
#include "oulad/synth.hpp"

using namespace oulad;

namespace {

// Three presentations over two modules, no clicks needed.
RawTables two_module_tables() {
    SynthSpec spec = default_synth_spec();
    spec.n_students = 8;
    spec.presentations.push_back(spec.presentations[0]);
    spec.presentations[1].presentation = "2014B";
    spec.presentations.push_back(spec.presentations[0]);
    spec.presentations[2].module = "BBB";
    spec.click_density = 0.05;
    return generate_synthetic(spec).tables;
}

}  // namespace

TEST_CASE("policy names parse both ways") {
    CHECK(repeat_policy_from("remove") == RepeatPolicy::remove);
    CHECK(repeat_policy_from("keep") == RepeatPolicy::keep);
    CHECK(std::string(to_string(RepeatPolicy::remove)) == "remove");
    CHECK_THROWS_AS(repeat_policy_from("sometimes"), SpecError);
    CHECK(withdrawn_policy_from("keep") == WithdrawnPolicy::keep);
    CHECK_THROWS_AS(withdrawn_policy_from(""), SpecError);
}

TEST_CASE("explicit pair resolves to itself") {
    auto raw = two_module_tables();
    CohortSelector sel;
    sel.module = "AAA";
    sel.presentation = "2014B";
    auto pairs = resolve_selector(sel, raw);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0] == ModulePresentation{"AAA", "2014B"});
}

TEST_CASE("All presentation expands within the module, sorted") {
    auto raw = two_module_tables();
    CohortSelector sel;
    sel.module = "AAA";
    sel.presentation = "All";
    auto pairs = resolve_selector(sel, raw);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0] == ModulePresentation{"AAA", "2013J"});
    CHECK(pairs[1] == ModulePresentation{"AAA", "2014B"});
}

TEST_CASE("All module and All presentation expand to every course") {
    auto raw = two_module_tables();
    CohortSelector sel;
    auto pairs = resolve_selector(sel, raw);
    CHECK(pairs.size() == 3);
}

TEST_CASE("unknown pair raises a selection error naming it") {
    auto raw = two_module_tables();
    CohortSelector sel;
    sel.module = "AAA";
    sel.presentation = "2015J";
    CHECK_THROWS_WITH_AS(resolve_selector(sel, raw), doctest::Contains("AAA 2015J"),
                         SelectionError);
}

TEST_CASE("All presentations of an unknown module is a selection error") {
    auto raw = two_module_tables();
    CohortSelector sel;
    sel.module = "ZZZ";
    CHECK_THROWS_AS(resolve_selector(sel, raw), SelectionError);
}

TEST_CASE("repeat policy removes exactly the students with prior attempts") {
    auto raw = two_module_tables();
    std::size_t repeats = 0;
    for (const auto& s : raw.student_info)
        if (s.num_of_prev_attempts > 0) ++repeats;
    REQUIRE(repeats > 0);  // the generator seeds some

    auto kept = apply_repeat_policy(raw.student_info, RepeatPolicy::keep);
    CHECK(kept == raw.student_info);

    auto removed = apply_repeat_policy(raw.student_info, RepeatPolicy::remove);
    CHECK(removed.size() == raw.student_info.size() - repeats);
    for (const auto& s : removed) CHECK(s.num_of_prev_attempts == 0);
}

TEST_CASE("withdrawal cutoff is the last day of the window's final week") {
    CHECK(withdrawn_before(20, 3));        // week 3 ends on day 20
    CHECK_FALSE(withdrawn_before(21, 3));  // day 21 opens week 4
    CHECK(withdrawn_before(-1, -1));
    CHECK_FALSE(withdrawn_before(std::nullopt, 39));
}
