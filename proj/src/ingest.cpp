#include "oulad/ingest.hpp"

#include <charconv>
#include <future>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "oulad/cell.hpp"
#include "oulad/csv.hpp"
#include "oulad/errors.hpp"
#include "oulad/ingest_detail.hpp"

namespace oulad {
namespace {

bool is_missing_token(const std::string& s) {
    return s.empty() || s == "?" || s == "NA";
}

struct FieldRef {
    const CsvTable* table;
    std::size_t row;
    std::size_t col;

    [[noreturn]] void fail(const std::string& what) const {
        // Header occupies line 1; the parser rejects embedded newlines in
        // these files' fields, so data row i sits on line i + 2.
        throw ParseError(table->name, row + 2, col + 1, what);
    }

    const std::string& text() const { return table->rows[row][col]; }
};

int parse_int(const FieldRef& f) {
    const std::string& s = f.text();
    if (is_missing_token(s)) f.fail("expected an integer, found missing value");
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        f.fail("not an integer: \"" + s + "\"");
    return value;
}

std::optional<int> parse_opt_int(const FieldRef& f) {
    if (is_missing_token(f.text())) return std::nullopt;
    return parse_int(f);
}

double parse_double(const FieldRef& f) {
    const std::string& s = f.text();
    if (is_missing_token(s)) f.fail("expected a number, found missing value");
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        f.fail("not a number: \"" + s + "\"");
    return value;
}

std::optional<double> parse_opt_double(const FieldRef& f) {
    if (is_missing_token(f.text())) return std::nullopt;
    return parse_double(f);
}

std::string parse_text(const FieldRef& f) {
    return is_missing_token(f.text()) ? std::string() : f.text();
}

std::string parse_required_text(const FieldRef& f) {
    if (is_missing_token(f.text())) f.fail("field must not be missing");
    return f.text();
}

StudentId parse_student(const FieldRef& f) {
    const std::string s = parse_required_text(f);
    if (!StudentId::valid(s)) f.fail("not a student id: \"" + f.text() + "\"");
    return StudentId(s);
}

bool parse_bool01(const FieldRef& f) {
    int v = parse_int(f);
    if (v != 0 && v != 1) f.fail("expected 0 or 1, found \"" + f.text() + "\"");
    return v == 1;
}

// Resolves named columns up front so row binding is index arithmetic only.
class Binder {
public:
    explicit Binder(const CsvTable& table) : table_(table) {}

    std::size_t col(const std::string& name) const { return table_.require_column(name); }

    FieldRef at(std::size_t row, std::size_t col) const { return FieldRef{&table_, row, col}; }

    std::size_t rows() const { return table_.rows.size(); }

private:
    const CsvTable& table_;
};

std::vector<CourseRow> bind_courses(const CsvTable& t) {
    Binder b(t);
    const auto c_mod = b.col("code_module");
    const auto c_pres = b.col("code_presentation");
    const auto c_len = b.col("module_presentation_length");
    std::vector<CourseRow> out;
    out.reserve(b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        CourseRow r;
        r.code_module = parse_required_text(b.at(i, c_mod));
        r.code_presentation = parse_required_text(b.at(i, c_pres));
        r.module_presentation_length = parse_int(b.at(i, c_len));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<AssessmentRow> bind_assessments(const CsvTable& t) {
    Binder b(t);
    const auto c_mod = b.col("code_module");
    const auto c_pres = b.col("code_presentation");
    const auto c_id = b.col("id_assessment");
    const auto c_type = b.col("assessment_type");
    const auto c_date = b.col("date");
    const auto c_weight = b.col("weight");
    std::vector<AssessmentRow> out;
    out.reserve(b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        AssessmentRow r;
        r.code_module = parse_required_text(b.at(i, c_mod));
        r.code_presentation = parse_required_text(b.at(i, c_pres));
        r.id_assessment = parse_int(b.at(i, c_id));
        r.assessment_type = parse_required_text(b.at(i, c_type));
        r.date = parse_opt_int(b.at(i, c_date));
        r.weight = parse_double(b.at(i, c_weight));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<VleSiteRow> bind_vle(const CsvTable& t) {
    Binder b(t);
    const auto c_site = b.col("id_site");
    const auto c_mod = b.col("code_module");
    const auto c_pres = b.col("code_presentation");
    const auto c_type = b.col("activity_type");
    const auto c_from = b.col("week_from");
    const auto c_to = b.col("week_to");
    std::vector<VleSiteRow> out;
    out.reserve(b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        VleSiteRow r;
        r.id_site = parse_int(b.at(i, c_site));
        r.code_module = parse_required_text(b.at(i, c_mod));
        r.code_presentation = parse_required_text(b.at(i, c_pres));
        r.activity_type = parse_required_text(b.at(i, c_type));
        r.week_from = parse_opt_int(b.at(i, c_from));
        r.week_to = parse_opt_int(b.at(i, c_to));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<StudentInfoRow> bind_student_info(const CsvTable& t) {
    Binder b(t);
    const auto c_mod = b.col("code_module");
    const auto c_pres = b.col("code_presentation");
    const auto c_id = b.col("id_student");
    const auto c_gender = b.col("gender");
    const auto c_region = b.col("region");
    const auto c_edu = b.col("highest_education");
    const auto c_imd = b.col("imd_band");
    const auto c_age = b.col("age_band");
    const auto c_prev = b.col("num_of_prev_attempts");
    const auto c_cred = b.col("studied_credits");
    const auto c_dis = b.col("disability");
    const auto c_result = b.col("final_result");
    std::vector<StudentInfoRow> out;
    out.reserve(b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        StudentInfoRow r;
        r.code_module = parse_required_text(b.at(i, c_mod));
        r.code_presentation = parse_required_text(b.at(i, c_pres));
        r.id_student = parse_student(b.at(i, c_id));
        r.gender = parse_required_text(b.at(i, c_gender));
        r.region = parse_text(b.at(i, c_region));
        r.highest_education = parse_text(b.at(i, c_edu));
        r.imd_band = parse_text(b.at(i, c_imd));
        r.age_band = parse_text(b.at(i, c_age));
        r.num_of_prev_attempts = parse_int(b.at(i, c_prev));
        r.studied_credits = parse_int(b.at(i, c_cred));
        r.disability = parse_text(b.at(i, c_dis));
        r.final_result = parse_required_text(b.at(i, c_result));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<RegistrationRow> bind_registration(const CsvTable& t) {
    Binder b(t);
    const auto c_mod = b.col("code_module");
    const auto c_pres = b.col("code_presentation");
    const auto c_id = b.col("id_student");
    const auto c_reg = b.col("date_registration");
    const auto c_unreg = b.col("date_unregistration");
    std::vector<RegistrationRow> out;
    out.reserve(b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        RegistrationRow r;
        r.code_module = parse_required_text(b.at(i, c_mod));
        r.code_presentation = parse_required_text(b.at(i, c_pres));
        r.id_student = parse_student(b.at(i, c_id));
        r.date_registration = parse_opt_int(b.at(i, c_reg));
        r.date_unregistration = parse_opt_int(b.at(i, c_unreg));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<StudentAssessmentRow> bind_student_assessment(const CsvTable& t) {
    Binder b(t);
    const auto c_assess = b.col("id_assessment");
    const auto c_id = b.col("id_student");
    const auto c_date = b.col("date_submitted");
    const auto c_banked = b.col("is_banked");
    const auto c_score = b.col("score");
    std::vector<StudentAssessmentRow> out;
    out.reserve(b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        StudentAssessmentRow r;
        r.id_assessment = parse_int(b.at(i, c_assess));
        r.id_student = parse_student(b.at(i, c_id));
        r.date_submitted = parse_int(b.at(i, c_date));
        r.is_banked = parse_bool01(b.at(i, c_banked));
        r.score = parse_opt_double(b.at(i, c_score));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<StudentVleRow> bind_student_vle(const CsvTable& t) {
    Binder b(t);
    const auto c_mod = b.col("code_module");
    const auto c_pres = b.col("code_presentation");
    const auto c_id = b.col("id_student");
    const auto c_site = b.col("id_site");
    const auto c_date = b.col("date");
    const auto c_click = b.col("sum_click");
    std::vector<StudentVleRow> out;
    out.reserve(b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        StudentVleRow r;
        r.code_module = parse_required_text(b.at(i, c_mod));
        r.code_presentation = parse_required_text(b.at(i, c_pres));
        r.id_student = parse_student(b.at(i, c_id));
        r.id_site = parse_int(b.at(i, c_site));
        r.date = parse_int(b.at(i, c_date));
        r.sum_click = parse_int(b.at(i, c_click));
        out.push_back(std::move(r));
    }
    return out;
}

std::string opt_field(const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string();
}

}  // namespace

namespace detail {

RawTables bind_tables(const CsvTable& courses,
                      const CsvTable& assessments,
                      const CsvTable& vle,
                      const CsvTable& student_info,
                      const CsvTable& student_registration,
                      const CsvTable& student_assessment,
                      const CsvTable& student_vle) {
    RawTables raw;
    raw.courses = bind_courses(courses);
    raw.assessments = bind_assessments(assessments);
    raw.vle = bind_vle(vle);
    raw.student_info = bind_student_info(student_info);
    raw.student_registration = bind_registration(student_registration);
    raw.student_assessment = bind_student_assessment(student_assessment);
    raw.student_vle = bind_student_vle(student_vle);
    return raw;
}

}  // namespace detail

const std::vector<std::string>& oulad_file_names() {
    static const std::vector<std::string> names = {
        "courses.csv",           "assessments.csv",       "vle.csv",
        "studentInfo.csv",       "studentRegistration.csv", "studentAssessment.csv",
        "studentVle.csv",
    };
    return names;
}

RawTables load_oulad(const std::filesystem::path& data_dir) {
    const auto& names = oulad_file_names();
    for (const auto& name : names) {
        auto path = data_dir / name;
        if (!std::filesystem::exists(path))
            throw AcquisitionError("missing OULAD file: " + path.string());
    }

    // The seven files are independent until binding; parse them concurrently.
    std::vector<std::future<CsvTable>> futures;
    futures.reserve(names.size());
    for (const auto& name : names) {
        futures.push_back(std::async(std::launch::async,
                                      [path = data_dir / name] { return read_csv_file(path); }));
    }
    std::vector<CsvTable> tables;
    tables.reserve(names.size());
    for (auto& f : futures) tables.push_back(f.get());

    return detail::bind_tables(tables[0], tables[1], tables[2], tables[3], tables[4], tables[5],
                               tables[6]);
}

RawTables load_sample() {
    const auto& names = oulad_file_names();
    std::vector<CsvTable> tables;
    tables.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i)
        tables.push_back(read_csv_text(detail::kSampleCsv[i], names[i]));
    return detail::bind_tables(tables[0], tables[1], tables[2], tables[3], tables[4], tables[5],
                               tables[6]);
}

void write_oulad(const RawTables& raw, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);

    {
        std::vector<std::vector<std::string>> rows;
        rows.reserve(raw.courses.size());
        for (const auto& r : raw.courses)
            rows.push_back({r.code_module, r.code_presentation,
                            std::to_string(r.module_presentation_length)});
        write_csv_file(dir / "courses.csv",
                    {"code_module", "code_presentation", "module_presentation_length"}, rows);
    }
    {
        std::vector<std::vector<std::string>> rows;
        rows.reserve(raw.assessments.size());
        for (const auto& r : raw.assessments)
            rows.push_back({r.code_module, r.code_presentation, std::to_string(r.id_assessment),
                            r.assessment_type, opt_field(r.date), format_double(r.weight)});
        write_csv_file(dir / "assessments.csv",
                    {"code_module", "code_presentation", "id_assessment", "assessment_type",
                     "date", "weight"},
                    rows);
    }
    {
        std::vector<std::vector<std::string>> rows;
        rows.reserve(raw.vle.size());
        for (const auto& r : raw.vle)
            rows.push_back({std::to_string(r.id_site), r.code_module, r.code_presentation,
                            r.activity_type, opt_field(r.week_from), opt_field(r.week_to)});
        write_csv_file(
            dir / "vle.csv",
            {"id_site", "code_module", "code_presentation", "activity_type", "week_from",
             "week_to"},
            rows);
    }
    {
        std::vector<std::vector<std::string>> rows;
        rows.reserve(raw.student_info.size());
        for (const auto& r : raw.student_info)
            rows.push_back({r.code_module, r.code_presentation, r.id_student.str(), r.gender,
                            r.region, r.highest_education, r.imd_band, r.age_band,
                            std::to_string(r.num_of_prev_attempts),
                            std::to_string(r.studied_credits), r.disability, r.final_result});
        write_csv_file(dir / "studentInfo.csv",
                    {"code_module", "code_presentation", "id_student", "gender", "region",
                     "highest_education", "imd_band", "age_band", "num_of_prev_attempts",
                     "studied_credits", "disability", "final_result"},
                    rows);
    }
    {
        std::vector<std::vector<std::string>> rows;
        rows.reserve(raw.student_registration.size());
        for (const auto& r : raw.student_registration)
            rows.push_back({r.code_module, r.code_presentation, r.id_student.str(),
                            opt_field(r.date_registration), opt_field(r.date_unregistration)});
        write_csv_file(dir / "studentRegistration.csv",
                    {"code_module", "code_presentation", "id_student", "date_registration",
                     "date_unregistration"},
                    rows);
    }
    {
        std::vector<std::vector<std::string>> rows;
        rows.reserve(raw.student_assessment.size());
        for (const auto& r : raw.student_assessment)
            rows.push_back({std::to_string(r.id_assessment), r.id_student.str(),
                            std::to_string(r.date_submitted), r.is_banked ? "1" : "0",
                            r.score ? format_double(*r.score) : std::string()});
        write_csv_file(dir / "studentAssessment.csv",
                    {"id_assessment", "id_student", "date_submitted", "is_banked", "score"}, rows);
    }
    {
        std::vector<std::vector<std::string>> rows;
        rows.reserve(raw.student_vle.size());
        for (const auto& r : raw.student_vle)
            rows.push_back({r.code_module, r.code_presentation, r.id_student.str(),
                            std::to_string(r.id_site), std::to_string(r.date),
                            std::to_string(r.sum_click)});
        write_csv_file(dir / "studentVle.csv",
                    {"code_module", "code_presentation", "id_student", "id_site", "date",
                     "sum_click"},
                    rows);
    }
}

std::size_t ValidationReport::total_violations() const {
    std::size_t n = 0;
    for (const auto& [check, keys] : violations) n += keys.size();
    return n;
}

ValidationReport validate_schema(const RawTables& raw) {
    ValidationReport report;
    report.row_counts = {
        {"courses", raw.courses.size()},
        {"assessments", raw.assessments.size()},
        {"vle", raw.vle.size()},
        {"studentInfo", raw.student_info.size()},
        {"studentRegistration", raw.student_registration.size()},
        {"studentAssessment", raw.student_assessment.size()},
        {"studentVle", raw.student_vle.size()},
    };

    auto add = [&](const std::string& check, std::string key) {
        report.violations[check].push_back(std::move(key));
    };

    std::set<ModulePresentation> known_courses;
    {
        std::set<ModulePresentation> seen;
        for (const auto& c : raw.courses) {
            ModulePresentation mp{c.code_module, c.code_presentation};
            if (!seen.insert(mp).second)
                add("duplicate_course", c.code_module + "/" + c.code_presentation);
            known_courses.insert(mp);
        }
    }

    auto pair_key = [](const std::string& m, const std::string& p) { return m + "/" + p; };
    auto check_course_ref = [&](const std::string& table, const std::string& m,
                                const std::string& p, std::set<std::string>& reported) {
        if (!known_courses.count({m, p})) {
            auto key = table + ": " + pair_key(m, p);
            if (reported.insert(key).second) add("course_reference", key);
        }
    };

    std::set<std::string> reported_pairs;
    for (const auto& r : raw.assessments)
        check_course_ref("assessments", r.code_module, r.code_presentation, reported_pairs);
    for (const auto& r : raw.vle)
        check_course_ref("vle", r.code_module, r.code_presentation, reported_pairs);
    for (const auto& r : raw.student_info)
        check_course_ref("studentInfo", r.code_module, r.code_presentation, reported_pairs);
    for (const auto& r : raw.student_registration)
        check_course_ref("studentRegistration", r.code_module, r.code_presentation,
                         reported_pairs);
    for (const auto& r : raw.student_vle)
        check_course_ref("studentVle", r.code_module, r.code_presentation, reported_pairs);

    {
        std::set<std::tuple<std::string, std::string, std::string>> seen;
        for (const auto& r : raw.student_info) {
            if (!seen.insert({r.code_module, r.code_presentation, r.id_student.str()}).second)
                add("duplicate_student_info",
                    pair_key(r.code_module, r.code_presentation) + " student " +
                        r.id_student.str());
        }
    }

    {
        std::unordered_set<int> known_assessments;
        for (const auto& a : raw.assessments) known_assessments.insert(a.id_assessment);
        std::set<std::pair<int, std::string>> seen;
        std::set<int> reported_missing;
        for (const auto& r : raw.student_assessment) {
            if (!known_assessments.count(r.id_assessment) &&
                reported_missing.insert(r.id_assessment).second)
                add("assessment_reference", std::to_string(r.id_assessment));
            if (!seen.insert({r.id_assessment, r.id_student.str()}).second)
                add("duplicate_student_assessment",
                    "assessment " + std::to_string(r.id_assessment) + " student " +
                        r.id_student.str());
            if (r.score && (*r.score < 0.0 || *r.score > 100.0))
                add("score_range", "assessment " + std::to_string(r.id_assessment) + " student " +
                                       r.id_student.str());
        }
    }

    {
        std::unordered_set<int> known_sites;
        for (const auto& s : raw.vle) known_sites.insert(s.id_site);
        std::set<int> reported_missing;
        for (const auto& r : raw.student_vle) {
            if (!known_sites.count(r.id_site) && reported_missing.insert(r.id_site).second)
                add("site_reference", std::to_string(r.id_site));
            if (r.sum_click < 1)
                add("positive_clicks", "student " + r.id_student.str() + " site " +
                                           std::to_string(r.id_site) + " day " +
                                           std::to_string(r.date));
        }
    }

    {
        // Everyone in studentRegistration should also appear in studentInfo
        // for the same presentation.
        std::set<std::tuple<std::string, std::string, std::string>> known;
        for (const auto& r : raw.student_info)
            known.insert({r.code_module, r.code_presentation, r.id_student.str()});
        std::set<std::string> reported;
        for (const auto& r : raw.student_registration) {
            if (!known.count({r.code_module, r.code_presentation, r.id_student.str()})) {
                auto key = pair_key(r.code_module, r.code_presentation) + " student " +
                           r.id_student.str();
                if (reported.insert(key).second) add("registration_student_reference", key);
            }
        }
    }

    report.pass = report.violations.empty();
    return report;
}

}  // namespace oulad
