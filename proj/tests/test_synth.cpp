#include <doctest.h>

#include <random>

#include "oulad/errors.hpp"
#include "oulad/ingest.hpp"
#include "oulad/synth.hpp"

using namespace oulad;

namespace {

SynthSpec random_spec(std::mt19937_64& gen) {
    SynthSpec spec = default_synth_spec();
    spec.seed = gen();
    spec.n_students = 5 + static_cast<int>(gen() % 30);
    spec.n_sites = 3 + static_cast<int>(gen() % 20);
    spec.click_density = 0.02 + 0.3 * (static_cast<double>(gen() % 1000) / 1000.0);
    spec.withdrawal_rate = 0.3 * (static_cast<double>(gen() % 1000) / 1000.0);
    spec.repeat_rate = 0.3 * (static_cast<double>(gen() % 1000) / 1000.0);
    if (gen() % 2) {
        spec.presentations.push_back(spec.presentations[0]);
        spec.presentations[1].module = "BBB";
        spec.presentations[1].length = 240;
    }
    return spec;
}

}  // namespace

TEST_CASE("generation is deterministic for a fixed spec") {
    SynthSpec spec = default_synth_spec();
    spec.seed = 7;
    auto a = generate_synthetic(spec);
    auto b = generate_synthetic(spec);
    CHECK(a.tables.student_info == b.tables.student_info);
    CHECK(a.tables.student_vle == b.tables.student_vle);
    CHECK(a.tables.student_assessment == b.tables.student_assessment);
}

TEST_CASE("different seeds give different data") {
    SynthSpec spec = default_synth_spec();
    spec.seed = 1;
    auto a = generate_synthetic(spec);
    spec.seed = 2;
    auto b = generate_synthetic(spec);
    CHECK(a.tables.student_info != b.tables.student_info);
}

TEST_CASE("every generated dataset passes schema validation") {
    std::mt19937_64 gen(2024);
    for (int i = 0; i < 100; ++i) {
        auto spec = random_spec(gen);
        CAPTURE(spec.seed);
        auto result = generate_synthetic(spec);
        auto report = validate_schema(result.tables);
        REQUIRE(report.total_violations() == 0);
    }
}

TEST_CASE("truth totals match the emitted clickstream") {
    SynthSpec spec = default_synth_spec();
    spec.seed = 11;
    spec.n_students = 20;
    auto result = generate_synthetic(spec);

    std::map<std::string, long long> per_student;
    for (const auto& r : result.tables.student_vle) per_student[r.id_student.str()] += r.sum_click;

    long long truth_total = 0;
    for (const auto& [key, truth] : result.truth) {
        long long by_day = 0;
        for (const auto& [day, n] : truth.clicks_by_day) by_day += n;
        long long by_week = 0;
        for (const auto& [week, n] : truth.clicks_by_week) by_week += n;
        long long by_type = 0;
        for (const auto& [type, n] : truth.clicks_by_type) by_type += n;
        CHECK(by_day == by_week);
        CHECK(by_day == by_type);
        if (by_day > 0) CHECK(per_student.at(std::get<2>(key)) == by_day);
        truth_total += by_day;
    }
    long long table_total = 0;
    for (const auto& r : result.tables.student_vle) table_total += r.sum_click;
    CHECK(truth_total == table_total);
}

TEST_CASE("registrations precede withdrawals") {
    SynthSpec spec = default_synth_spec();
    spec.seed = 5;
    spec.withdrawal_rate = 0.5;
    auto tables = generate_synthetic(spec).tables;
    bool saw_withdrawal = false;
    for (const auto& r : tables.student_registration) {
        if (!r.date_unregistration) continue;
        saw_withdrawal = true;
        CHECK(r.date_registration <= *r.date_unregistration);
    }
    CHECK(saw_withdrawal);
}

TEST_CASE("spec validation rejects broken weight sums and rates") {
    SynthSpec spec = default_synth_spec();
    spec.presentations[0].assessments[0].weight += 5.0;  // CA no longer 100
    CHECK_THROWS_AS(generate_synthetic(spec), SpecError);

    spec = default_synth_spec();
    spec.click_density = 1.5;
    CHECK_THROWS_AS(generate_synthetic(spec), SpecError);

    spec = default_synth_spec();
    spec.presentations[0].assessments[1].date.reset();  // only Exams may omit dates
    CHECK_THROWS_AS(generate_synthetic(spec), SpecError);

    spec = default_synth_spec();
    spec.presentations.push_back(spec.presentations[0]);  // duplicate pair
    CHECK_THROWS_AS(generate_synthetic(spec), SpecError);
}

TEST_CASE("withdrawn students stop clicking after unregistration") {
    SynthSpec spec = default_synth_spec();
    spec.seed = 13;
    spec.withdrawal_rate = 0.6;
    auto tables = generate_synthetic(spec).tables;
    std::map<std::string, int> unreg;
    for (const auto& r : tables.student_registration)
        if (r.date_unregistration) unreg[r.id_student.str()] = *r.date_unregistration;
    for (const auto& r : tables.student_vle) {
        auto it = unreg.find(r.id_student.str());
        if (it != unreg.end()) CHECK(r.date <= it->second);
    }
}
