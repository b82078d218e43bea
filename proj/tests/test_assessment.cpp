#include <doctest.h>

#include "oracle.hpp"
#include "oulad/assessment.hpp"
#include "oulad/errors.hpp"
#include "oulad/synth.hpp"

using namespace oulad;

namespace {

RawTables fixture() {
    SynthSpec spec = default_synth_spec();
    spec.seed = 31;
    spec.n_students = 25;
    return generate_synthetic(spec).tables;
}

CohortSelector aaa_selector(int begin = -4, int end = 39) {
    CohortSelector sel;
    sel.module = "AAA";
    sel.presentation = "2013J";
    sel.window = WeekRange{begin, end};
    return sel;
}

}  // namespace

TEST_CASE("weighted CA score under the zero policy") {
    auto one = weighted_ca_score({{97.0, 12.5}, {68.0, 10.0}}, NaPolicy::zero);
    REQUIRE(one.has_value());
    CHECK(*one == doctest::Approx(84.11111111).epsilon(1e-9));

    auto two = weighted_ca_score({{std::nullopt, 12.5}, {27.0, 10.0}}, NaPolicy::zero);
    REQUIRE(two.has_value());
    CHECK(*two == 12.0);
}

TEST_CASE("weighted CA score under the drop policy") {
    auto dropped = weighted_ca_score({{std::nullopt, 12.5}, {27.0, 10.0}}, NaPolicy::drop);
    REQUIRE(dropped.has_value());
    CHECK(*dropped == 27.0);

    CHECK_FALSE(weighted_ca_score({{std::nullopt, 12.5}}, NaPolicy::drop).has_value());
    CHECK_FALSE(weighted_ca_score({}, NaPolicy::zero).has_value());
}

TEST_CASE("reactivity is due day minus submission day") {
    CHECK(compute_reactivity(19, 18) == 1);
    CHECK(compute_reactivity(19, 25) == -6);
    CHECK(compute_reactivity(19, 19) == 0);
}

TEST_CASE("schedule imputes missing due dates as the presentation length") {
    auto raw = fixture();
    auto rows = assessment_schedule({"AAA", "2013J"}, raw);
    REQUIRE(rows.size() == 5);
    // the Exam has no published date and lands last at day 268
    CHECK_FALSE(rows.back().date.has_value());
    CHECK(rows.back().effective_due == 268);
    CHECK(rows.back().week == week_of_day(268));
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(std::tie(rows[i - 1].effective_due, rows[i - 1].id_assessment) <=
              std::tie(rows[i].effective_due, rows[i].id_assessment));
    for (const auto& r : rows) CHECK(r.week == oracle::week_of_day(r.effective_due));
}

TEST_CASE("schedule for an unknown pair is a selection error") {
    auto raw = fixture();
    CHECK_THROWS_AS(assessment_schedule({"AAA", "2099B"}, raw), SelectionError);
}

TEST_CASE("assessment rows join, window, and derive reactivity like the oracle") {
    auto raw = fixture();
    int wb = 1;
    int we = 20;
    auto bundle = extract_assessment(aaa_selector(wb, we), raw, NaPolicy::zero);

    auto expected = oracle::submissions(raw, "AAA", "2013J", wb, we, true);
    REQUIRE(bundle.data.size() == expected.size());

    std::map<std::pair<std::string, int>, const oracle::OracleSubmission*> by_key;
    for (const auto& e : expected) by_key[{e.student, e.id_assessment}] = &e;
    for (const auto& row : bundle.data) {
        auto it = by_key.find({row.id_student.str(), row.id_assessment});
        REQUIRE(it != by_key.end());
        CHECK(row.score == it->second->score);
        CHECK(row.reactivity == it->second->reactivity);
    }

    // ordering: student, then due day, then assessment id
    for (std::size_t i = 1; i < bundle.data.size(); ++i)
        CHECK(bundle.data[i - 1].id_student <= bundle.data[i].id_student);
}

TEST_CASE("rows without a published due date carry no reactivity") {
    auto raw = fixture();
    auto bundle = extract_assessment(aaa_selector(), raw, NaPolicy::zero);
    bool saw_exam_row = false;
    for (const auto& row : bundle.data) {
        if (!row.date.has_value()) {
            saw_exam_row = true;
            CHECK_FALSE(row.reactivity.has_value());
        } else {
            CHECK(row.reactivity == *row.date - row.date_submitted);
        }
    }
    CHECK(saw_exam_row);
}

TEST_CASE("performance matrix matches a brute-force recomputation") {
    auto raw = fixture();
    for (auto policy : {NaPolicy::zero, NaPolicy::drop}) {
        auto bundle = extract_assessment(aaa_selector(1, 30), raw, policy);
        auto window = oracle::windowed_schedule(raw, "AAA", "2013J", 1, 30);
        auto scores = oracle::score_table(oracle::submissions(raw, "AAA", "2013J", 1, 30, true));

        REQUIRE(bundle.performance.rows.size() == scores.size());
        int id_col = bundle.performance.require_column("id_student");
        int avg_col = bundle.performance.require_column("average_CA_score");
        for (const auto& row : bundle.performance.rows) {
            const auto& student = row[id_col].text_value();
            const auto& mine = scores.at(student);
            for (const auto& a : window) {
                int col = bundle.performance.require_column(std::to_string(a.id));
                auto it = mine.find(a.id);
                if (it == mine.end() || !it->second) {
                    CHECK(row[col].is_missing());
                } else {
                    CHECK(row[col].number() == *it->second);
                }
            }
            auto avg = oracle::ca_average(window, mine, policy == NaPolicy::drop);
            if (avg) {
                REQUIRE(row[avg_col].is_number());
                CHECK(row[avg_col].number() == doctest::Approx(*avg).epsilon(1e-12));
            } else {
                CHECK(row[avg_col].is_missing());
            }
        }
    }
}

TEST_CASE("Exam scores stay out of the CA average but keep their column") {
    RawTables raw = fixture();
    auto bundle = extract_assessment(aaa_selector(), raw, NaPolicy::zero);
    auto sched = assessment_schedule({"AAA", "2013J"}, raw);
    int exam_id = 0;
    for (const auto& s : sched)
        if (s.assessment_type == "Exam") exam_id = s.id_assessment;
    REQUIRE(exam_id != 0);
    CHECK(bundle.performance.column(std::to_string(exam_id)) >= 0);

    // zero-policy average over the full window uses CA weights only, so a
    // student's average never depends on the exam score column.
    auto window = oracle::windowed_schedule(raw, "AAA", "2013J", -4, 39);
    auto scores = oracle::score_table(oracle::submissions(raw, "AAA", "2013J", -4, 39, true));
    int avg_col = bundle.performance.require_column("average_CA_score");
    int id_col = bundle.performance.require_column("id_student");
    for (const auto& row : bundle.performance.rows) {
        auto mine = scores.at(row[id_col].text_value());
        mine.erase(exam_id);
        auto avg = oracle::ca_average(window, mine, false);
        REQUIRE(avg.has_value());
        CHECK(row[avg_col].number() == doctest::Approx(*avg).epsilon(1e-12));
    }
}

TEST_CASE("reactivity matrix mirrors the performance shape without the average") {
    auto raw = fixture();
    auto bundle = extract_assessment(aaa_selector(1, 30), raw, NaPolicy::zero);
    CHECK(bundle.reactivity.columns.size() == bundle.performance.columns.size() - 1);
    CHECK(bundle.reactivity.rows.size() == bundle.performance.rows.size());
    CHECK(bundle.reactivity.column("average_CA_score") == -1);

    auto window = oracle::windowed_schedule(raw, "AAA", "2013J", 1, 30);
    auto subs = oracle::submissions(raw, "AAA", "2013J", 1, 30, true);
    std::map<std::pair<std::string, int>, std::optional<int>> expected;
    for (const auto& s : subs)
        expected.emplace(std::make_pair(s.student, s.id_assessment), s.reactivity);
    int id_col = bundle.reactivity.require_column("id_student");
    for (const auto& row : bundle.reactivity.rows) {
        for (const auto& a : window) {
            int col = bundle.reactivity.require_column(std::to_string(a.id));
            auto it = expected.find({row[id_col].text_value(), a.id});
            if (it == expected.end() || !it->second) {
                CHECK(row[col].is_missing());
            } else {
                CHECK(row[col].number() == *it->second);
            }
        }
    }
}

TEST_CASE("windowing by due week drops out-of-range assessments entirely") {
    auto raw = fixture();
    // default AAA spec: due days 19, 54, 117, 166 and the exam at 268
    auto bundle = extract_assessment(aaa_selector(1, 10), raw, NaPolicy::zero);
    CHECK(bundle.performance.column(std::to_string(14000)) >= 0);  // day 19, week 3
    CHECK(bundle.performance.column(std::to_string(14001)) >= 0);  // day 54, week 8
    CHECK(bundle.performance.column(std::to_string(14002)) == -1);  // day 117, week 17
    for (const auto& row : bundle.data) CHECK(row.id_assessment <= 14001);
}

TEST_CASE("repeat policy changes the student set") {
    auto raw = fixture();
    auto sel = aaa_selector();
    sel.repeat_students = RepeatPolicy::keep;
    auto kept = extract_assessment(sel, raw, NaPolicy::zero);
    sel.repeat_students = RepeatPolicy::remove;
    auto removed = extract_assessment(sel, raw, NaPolicy::zero);
    CHECK(kept.performance.rows.size() >= removed.performance.rows.size());
    auto repeats = oracle::repeat_students(raw, "AAA", "2013J");
    int id_col = removed.performance.require_column("id_student");
    for (const auto& row : removed.performance.rows)
        CHECK_FALSE(repeats.count(row[id_col].text_value()));
}

TEST_CASE("invalid windows are rejected") {
    auto raw = fixture();
    CHECK_THROWS_AS(extract_assessment(aaa_selector(0, 4), raw, NaPolicy::zero), SpecError);
    CHECK_THROWS_AS(extract_assessment(aaa_selector(5, 2), raw, NaPolicy::zero), SpecError);
}

TEST_CASE("multi-pair extracts add key columns and drop the average") {
    SynthSpec spec = default_synth_spec();
    spec.seed = 8;
    spec.n_students = 12;
    spec.presentations.push_back(spec.presentations[0]);
    spec.presentations[1].presentation = "2014B";
    auto raw = generate_synthetic(spec).tables;

    CohortSelector sel;
    sel.module = "AAA";
    sel.presentation = "All";
    auto bundle = extract_assessment(sel, raw, NaPolicy::zero);
    CHECK(bundle.pairs.size() == 2);
    CHECK(bundle.performance.column("code_module") >= 0);
    CHECK(bundle.performance.column("code_presentation") >= 0);
    CHECK(bundle.performance.column("average_CA_score") == -1);

    // every data row belongs to one of the selected pairs
    for (const auto& row : bundle.data) {
        CHECK(row.code_module == "AAA");
        CHECK((row.code_presentation == "2013J" || row.code_presentation == "2014B"));
    }
}
