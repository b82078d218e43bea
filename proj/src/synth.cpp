#include "oulad/synth.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "oulad/errors.hpp"
#include "oulad/rng.hpp"
#include "oulad/weeks.hpp"

namespace oulad {
namespace {

const std::vector<std::string> kRegions = {
    "East Anglian Region", "Scotland", "North Western Region", "South East Region",
    "West Midlands Region", "Wales", "Ireland", "London Region",
};
const std::vector<std::string> kEducation = {
    "HE Qualification", "A Level or Equivalent", "Lower Than A Level",
    "Post Graduate Qualification", "No Formal quals",
};
const std::vector<std::string> kImdBands = {
    "0-10%", "10-20%", "20-30%", "30-40%", "40-50%",
    "50-60%", "60-70%", "70-80%", "80-90%", "90-100%",
};
const std::vector<std::string> kAgeBands = {"0-35", "35-55", "55<="};
const std::vector<std::string> kResults = {"Distinction", "Pass", "Fail"};

void validate_spec(const SynthSpec& spec) {
    if (spec.n_students < 1) throw SpecError("synthetic spec needs n_students >= 1");
    if (spec.presentations.empty())
        throw SpecError("synthetic spec needs at least one presentation");
    if (spec.n_sites < 1) throw SpecError("synthetic spec needs n_sites >= 1");
    if (spec.activity_types.empty())
        throw SpecError("synthetic spec needs a non-empty activity type alphabet");
    if (spec.click_density < 0.0 || spec.click_density > 1.0)
        throw SpecError("click density must lie in [0, 1]");
    if (spec.withdrawal_rate < 0.0 || spec.withdrawal_rate > 1.0)
        throw SpecError("withdrawal rate must lie in [0, 1]");
    if (spec.repeat_rate < 0.0 || spec.repeat_rate > 1.0)
        throw SpecError("repeat rate must lie in [0, 1]");

    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& pres : spec.presentations) {
        if (pres.length < 1) throw SpecError("presentation length must be positive");
        if (!seen.insert({pres.module, pres.presentation}).second)
            throw SpecError("duplicate presentation " + pres.module + " " + pres.presentation);
        double ca = 0.0;
        double exam = 0.0;
        bool has_ca = false;
        bool has_exam = false;
        for (const auto& a : pres.assessments) {
            if (a.type != "TMA" && a.type != "CMA" && a.type != "Exam")
                throw SpecError("assessment type must be TMA, CMA, or Exam, got '" + a.type +
                                "'");
            if (a.weight < 0.0) throw SpecError("assessment weight must be non-negative");
            if (!a.date && a.type != "Exam")
                throw SpecError("only Exam assessments may omit the due date");
            if (a.type == "Exam") {
                exam += a.weight;
                has_exam = true;
            } else {
                ca += a.weight;
                has_ca = true;
            }
        }
        if (has_ca && std::abs(ca - 100.0) > 1e-9)
            throw SpecError("CA weights of " + pres.module + " " + pres.presentation +
                            " sum to " + std::to_string(ca) + ", expected 100");
        if (has_exam && std::abs(exam - 100.0) > 1e-9)
            throw SpecError("Exam weights of " + pres.module + " " + pres.presentation +
                            " sum to " + std::to_string(exam) + ", expected 100");
    }
}

}  // namespace

SynthSpec default_synth_spec() {
    SynthSpec spec;
    spec.presentations = {{
        "AAA",
        "2013J",
        268,
        {
            {"TMA", 19, 10.0},
            {"TMA", 54, 20.0},
            {"CMA", 117, 30.0},
            {"TMA", 166, 40.0},
            {"Exam", std::nullopt, 100.0},
        },
    }};
    spec.activity_types = {"homepage", "oucontent", "forumng", "resource",
                           "url",      "subpage",   "quiz"};
    return spec;
}

SynthResult generate_synthetic(const SynthSpec& spec) {
    validate_spec(spec);

    SynthResult result;
    RawTables& t = result.tables;
    DeterministicRng rng(spec.seed);

    int next_site = 600000;
    int next_assessment = 14000;

    for (const auto& pres : spec.presentations) {
        t.courses.push_back({pres.module, pres.presentation, pres.length});

        // Sites for this presentation. Guarantee every alphabet type appears
        // when there is room, then fill randomly.
        std::vector<int> site_ids;
        std::vector<std::string> site_types;
        for (int i = 0; i < spec.n_sites; ++i) {
            const std::string& type =
                i < static_cast<int>(spec.activity_types.size())
                    ? spec.activity_types[static_cast<std::size_t>(i)]
                    : rng.pick(spec.activity_types);
            VleSiteRow site;
            site.id_site = next_site++;
            site.code_module = pres.module;
            site.code_presentation = pres.presentation;
            site.activity_type = type;
            if (rng.chance(0.3)) {
                int from = static_cast<int>(rng.int_in(-2, 4));
                site.week_from = from == 0 ? 1 : from;
                int to = static_cast<int>(rng.int_in(5, 30));
                site.week_to = to;
            }
            site_ids.push_back(site.id_site);
            site_types.push_back(type);
            t.vle.push_back(std::move(site));
        }

        struct Scheduled {
            int id;
            std::string type;
            std::optional<int> date;
            int effective_due;
            double weight;
        };
        std::vector<Scheduled> schedule;
        for (const auto& a : pres.assessments) {
            AssessmentRow row;
            row.code_module = pres.module;
            row.code_presentation = pres.presentation;
            row.id_assessment = next_assessment++;
            row.assessment_type = a.type;
            row.date = a.date;
            row.weight = a.weight;
            schedule.push_back(
                {row.id_assessment, a.type, a.date, a.date ? *a.date : pres.length, a.weight});
            t.assessments.push_back(std::move(row));
        }

        // Distinct student ids for the presentation.
        std::set<long long> ids;
        while (static_cast<int>(ids.size()) < spec.n_students)
            ids.insert(rng.int_in(100000, 2700000));

        for (long long raw_id : ids) {
            StudentId student(std::to_string(raw_id));
            const bool repeat = rng.chance(spec.repeat_rate);
            const bool withdrawn = rng.chance(spec.withdrawal_rate);

            StudentInfoRow info;
            info.code_module = pres.module;
            info.code_presentation = pres.presentation;
            info.id_student = student;
            info.gender = rng.chance(0.5) ? "M" : "F";
            info.region = rng.pick(kRegions);
            info.highest_education = rng.pick(kEducation);
            info.imd_band = rng.chance(0.05) ? std::string() : rng.pick(kImdBands);
            info.age_band = rng.pick(kAgeBands);
            info.num_of_prev_attempts = repeat ? static_cast<int>(rng.int_in(1, 3)) : 0;
            info.studied_credits = static_cast<int>(rng.int_in(1, 8)) * 30;
            info.disability = rng.chance(0.1) ? "Y" : "N";
            info.final_result = withdrawn ? "Withdrawn" : rng.pick(kResults);
            t.student_info.push_back(std::move(info));

            RegistrationRow reg;
            reg.code_module = pres.module;
            reg.code_presentation = pres.presentation;
            reg.id_student = student;
            if (!rng.chance(0.02))
                reg.date_registration = static_cast<int>(rng.int_in(-120, -1));
            std::optional<int> unregistered;
            if (withdrawn) {
                int earliest = reg.date_registration ? *reg.date_registration : -20;
                unregistered =
                    static_cast<int>(rng.int_in(std::max(earliest, -20), pres.length - 1));
                reg.date_unregistration = unregistered;
            }
            t.student_registration.push_back(std::move(reg));

            SynthStudentTruth truth;

            // Assessment submissions; none after an early withdrawal.
            std::vector<std::pair<std::optional<double>, double>> ca_items;
            for (const auto& s : schedule) {
                const bool gone = unregistered && *unregistered < s.effective_due;
                std::optional<double> score;
                if (!gone && rng.chance(0.88)) {
                    StudentAssessmentRow sa;
                    sa.id_assessment = s.id;
                    sa.id_student = student;
                    sa.date_submitted =
                        s.effective_due - static_cast<int>(rng.int_in(-5, 12));
                    sa.is_banked = rng.chance(0.02);
                    if (!rng.chance(0.05)) {
                        score = static_cast<double>(rng.int_in(0, 100));
                        sa.score = score;
                    }
                    t.student_assessment.push_back(std::move(sa));
                }
                if (s.type != "Exam") ca_items.emplace_back(score, s.weight);
            }
            if (!ca_items.empty()) {
                double num = 0.0;
                double den = 0.0;
                for (const auto& [score, weight] : ca_items) {
                    num += (score ? *score : 0.0) * weight;
                    den += weight;
                }
                truth.weighted_ca_zero = num / den;
            }

            // Clickstream; stops once the student has unregistered.
            const int last_day = unregistered ? std::min(*unregistered, pres.length - 1)
                                              : pres.length - 1;
            for (int day = -14; day <= last_day; ++day) {
                if (!rng.chance(spec.click_density)) continue;
                const int bursts = static_cast<int>(rng.int_in(1, 3));
                for (int b = 0; b < bursts; ++b) {
                    const std::size_t site =
                        static_cast<std::size_t>(rng.bounded(site_ids.size()));
                    StudentVleRow click;
                    click.code_module = pres.module;
                    click.code_presentation = pres.presentation;
                    click.id_student = student;
                    click.id_site = site_ids[site];
                    click.date = day;
                    click.sum_click = static_cast<int>(rng.int_in(1, 10));
                    truth.clicks_by_day[day] += click.sum_click;
                    truth.clicks_by_week[week_of_day(day)] += click.sum_click;
                    truth.clicks_by_type[site_types[site]] += click.sum_click;
                    t.student_vle.push_back(std::move(click));
                }
            }

            result.truth.emplace(std::tuple{pres.module, pres.presentation, student.str()},
                                 std::move(truth));
        }
    }
    return result;
}

}  // namespace oulad
