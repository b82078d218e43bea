#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "oulad/errors.hpp"
#include "oulad/ingest.hpp"
#include "oulad/ingest_detail.hpp"

using namespace oulad;
namespace fs = std::filesystem;

namespace {

// The seven tables parsed straight from small hand-written texts.
RawTables tiny_tables(const std::string& student_info_csv,
                      const std::string& student_assessment_csv,
                      const std::string& student_vle_csv) {
    auto courses = read_csv_text(
        "code_module,code_presentation,module_presentation_length\nAAA,2013J,268\n",
        "courses.csv");
    auto assessments = read_csv_text(
        "code_module,code_presentation,id_assessment,assessment_type,date,weight\n"
        "AAA,2013J,1752,TMA,19,10\n"
        "AAA,2013J,1757,Exam,?,100\n",
        "assessments.csv");
    auto vle = read_csv_text(
        "id_site,code_module,code_presentation,activity_type,week_from,week_to\n"
        "546652,AAA,2013J,forumng,,\n"
        "546712,AAA,2013J,oucontent,1,2\n",
        "vle.csv");
    auto info = read_csv_text(student_info_csv, "studentInfo.csv");
    auto reg = read_csv_text(
        "code_module,code_presentation,id_student,date_registration,date_unregistration\n"
        "AAA,2013J,11391,-159,\n",
        "studentRegistration.csv");
    auto sa = read_csv_text(student_assessment_csv, "studentAssessment.csv");
    auto sv = read_csv_text(student_vle_csv, "studentVle.csv");
    return detail::bind_tables(courses, assessments, vle, info, reg, sa, sv);
}

const char* kInfoHeader =
    "code_module,code_presentation,id_student,gender,region,highest_education,imd_band,"
    "age_band,num_of_prev_attempts,studied_credits,disability,final_result\n";
const char* kSaHeader = "id_assessment,id_student,date_submitted,is_banked,score\n";
const char* kSvHeader = "code_module,code_presentation,id_student,id_site,date,sum_click\n";

}  // namespace

TEST_CASE("fields bind with types, missing tokens, and student ids") {
    auto raw = tiny_tables(
        std::string(kInfoHeader) +
            "AAA,2013J,11391,M,East Anglian Region,HE Qualification,90-100%,55<=,0,240,N,Pass\n"
            "AAA,2013J,28400,F,Scotland,HE Qualification,?,35-55,0,60,N,Pass\n",
        std::string(kSaHeader) + "1752,11391,18,0,78\n1752,28400,22,1,NA\n",
        std::string(kSvHeader) + "AAA,2013J,11391,546652,-10,4\n");

    CHECK(raw.courses.size() == 1);
    CHECK(raw.courses[0].module_presentation_length == 268);

    REQUIRE(raw.assessments.size() == 2);
    CHECK(raw.assessments[0].date == 19);
    CHECK_FALSE(raw.assessments[1].date.has_value());
    CHECK(raw.assessments[1].weight == 100.0);

    REQUIRE(raw.vle.size() == 2);
    CHECK_FALSE(raw.vle[0].week_from.has_value());
    CHECK(raw.vle[1].week_from == 1);

    REQUIRE(raw.student_info.size() == 2);
    CHECK(raw.student_info[0].id_student.str() == "11391");
    CHECK(raw.student_info[1].imd_band == "");  // "?" is a missing token

    REQUIRE(raw.student_assessment.size() == 2);
    CHECK(raw.student_assessment[0].score == 78.0);
    CHECK(raw.student_assessment[1].is_banked);
    CHECK_FALSE(raw.student_assessment[1].score.has_value());

    CHECK(raw.student_registration[0].date_registration == -159);
    CHECK(raw.student_vle[0].date == -10);
}

TEST_CASE("malformed numeric field reports file, line, and column") {
    try {
        tiny_tables(std::string(kInfoHeader) +
                        "AAA,2013J,11391,M,r,e,i,a,zero,240,N,Pass\n",
                    kSaHeader, kSvHeader);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.file() == "studentInfo.csv");
        CHECK(e.line() == 2);
        CHECK(e.column() == 9);
    }
}

TEST_CASE("non-numeric student id is rejected") {
    CHECK_THROWS_AS(tiny_tables(std::string(kInfoHeader) +
                                    "AAA,2013J,12x4,M,r,e,i,a,0,240,N,Pass\n",
                                kSaHeader, kSvHeader),
                    ParseError);
}

TEST_CASE("missing required column is named in the error") {
    auto courses = read_csv_text("code_module,code_presentation\nAAA,2013J\n", "courses.csv");
    auto rest = tiny_tables(kInfoHeader, kSaHeader, kSvHeader);
    (void)rest;
    CHECK_THROWS_WITH_AS(
        detail::bind_tables(courses, read_csv_text(
            "code_module,code_presentation,id_assessment,assessment_type,date,weight\n",
            "assessments.csv"),
            read_csv_text("id_site,code_module,code_presentation,activity_type,week_from,week_to\n",
                          "vle.csv"),
            read_csv_text(kInfoHeader, "studentInfo.csv"),
            read_csv_text("code_module,code_presentation,id_student,date_registration,"
                          "date_unregistration\n",
                          "studentRegistration.csv"),
            read_csv_text(kSaHeader, "studentAssessment.csv"),
            read_csv_text(kSvHeader, "studentVle.csv")),
        doctest::Contains("module_presentation_length"), ParseError);
}

TEST_CASE("bundled sample loads and validates clean") {
    auto raw = load_sample();
    CHECK(raw.student_vle.size() == 5000);
    CHECK(raw.courses.size() == 1);
    auto report = validate_schema(raw);
    CHECK(report.pass);
    CHECK(report.total_violations() == 0);
    CHECK(report.row_counts.at("studentVle") == 5000);
}

TEST_CASE("write_oulad then load_oulad round-trips the sample exactly") {
    auto raw = load_sample();
    auto dir = fs::temp_directory_path() / "oulad_roundtrip";
    fs::create_directories(dir);
    write_oulad(raw, dir);
    auto back = load_oulad(dir);
    CHECK(back.courses == raw.courses);
    CHECK(back.assessments == raw.assessments);
    CHECK(back.vle == raw.vle);
    CHECK(back.student_info == raw.student_info);
    CHECK(back.student_registration == raw.student_registration);
    CHECK(back.student_assessment == raw.student_assessment);
    CHECK(back.student_vle == raw.student_vle);
    fs::remove_all(dir);
}

TEST_CASE("load_oulad names the first missing table") {
    auto dir = fs::temp_directory_path() / "oulad_missing";
    fs::remove_all(dir);
    fs::create_directories(dir);
    CHECK_THROWS_WITH_AS(load_oulad(dir), doctest::Contains("courses.csv"), AcquisitionError);
    fs::remove_all(dir);
}

TEST_CASE("validator flags broken references and bad values") {
    auto raw = load_sample();

    SUBCASE("unknown site in the clickstream") {
        raw.student_vle[0].id_site = 999999999;
        auto report = validate_schema(raw);
        CHECK_FALSE(report.pass);
        CHECK(report.violations.count("site_reference"));
    }
    SUBCASE("unknown assessment in submissions") {
        raw.student_assessment[0].id_assessment = 999999;
        auto report = validate_schema(raw);
        CHECK(report.violations.count("assessment_reference"));
    }
    SUBCASE("score outside 0..100") {
        raw.student_assessment[0].score = 101.0;
        auto report = validate_schema(raw);
        CHECK(report.violations.count("score_range"));
    }
    SUBCASE("non-positive click count") {
        raw.student_vle[0].sum_click = 0;
        auto report = validate_schema(raw);
        CHECK(report.violations.count("positive_clicks"));
    }
    SUBCASE("duplicate course row") {
        raw.courses.push_back(raw.courses[0]);
        auto report = validate_schema(raw);
        CHECK(report.violations.count("duplicate_course"));
    }
    SUBCASE("student info row for a course that does not exist") {
        raw.student_info[0].code_module = "ZZZ";
        auto report = validate_schema(raw);
        CHECK(report.violations.count("course_reference"));
    }
    SUBCASE("duplicate student info row") {
        raw.student_info.push_back(raw.student_info[0]);
        auto report = validate_schema(raw);
        CHECK(report.violations.count("duplicate_student_info"));
    }
    SUBCASE("registration row for an unknown student") {
        raw.student_registration[0].id_student = StudentId("999999999");
        auto report = validate_schema(raw);
        CHECK(report.violations.count("registration_student_reference"));
    }
    SUBCASE("duplicate submission for one assessment and student") {
        raw.student_assessment.push_back(raw.student_assessment[0]);
        auto report = validate_schema(raw);
        CHECK(report.violations.count("duplicate_student_assessment"));
    }
}
