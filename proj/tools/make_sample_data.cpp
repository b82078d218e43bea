// Regenerates src/sample_data.cpp, the synthetic presentation bundled into
// the library. One AAA/2013J presentation, trimmed to exactly 5000 clickstream
// rows so the embedded text stays small.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "oulad/ingest.hpp"
#include "oulad/synth.hpp"

namespace {

constexpr std::size_t kVleRows = 5000;

oulad::SynthSpec sample_spec() {
    oulad::SynthSpec spec = oulad::default_synth_spec();
    spec.seed = 20131;
    spec.n_students = 70;
    spec.n_sites = 40;
    spec.click_density = 0.16;
    spec.activity_types = {
        "dataplus",      "dualpane",     "externalquiz", "folder",
        "forumng",       "glossary",     "homepage",     "htmlactivity",
        "oucollaborate", "oucontent",    "ouelluminate", "ouwiki",
        "page",          "questionnaire", "quiz",        "repeatactivity",
        "resource",      "sharedsubpage", "subpage",     "url",
    };
    return spec;
}

std::string slurp(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_sample_data <output.cpp>\n";
        return 2;
    }

    oulad::RawTables raw = oulad::generate_synthetic(sample_spec()).tables;

    auto& clicks = raw.student_vle;
    if (clicks.size() < kVleRows) {
        std::cerr << "generator produced only " << clicks.size()
                  << " studentVle rows; raise click_density\n";
        return 1;
    }
    std::sort(clicks.begin(), clicks.end(), [](const auto& a, const auto& b) {
        return std::tie(a.id_student, a.date, a.id_site) <
               std::tie(b.id_student, b.date, b.id_site);
    });
    clicks.resize(kVleRows);

    // Drop sites the trimmed clickstream no longer touches so every vle row
    // stays observable in the sample.
    std::set<int> used_sites;
    for (const auto& row : clicks) used_sites.insert(row.id_site);
    std::erase_if(raw.vle, [&](const auto& site) { return !used_sites.count(site.id_site); });

    auto dir = std::filesystem::temp_directory_path() / "oulad_sample_gen";
    std::filesystem::create_directories(dir);
    oulad::write_oulad(raw, dir);

    static const char* kVarNames[7] = {
        "kCourses",  "kAssessments",       "kVle",       "kStudentInfo",
        "kStudentRegistration", "kStudentAssessment", "kStudentVle",
    };

    std::ofstream out(argv[1], std::ios::binary);
    out << "// Generated by tools/make_sample_data. Do not edit by hand.\n"
        << "#include \"oulad/ingest_detail.hpp\"\n\n"
        << "namespace oulad::detail {\n"
        << "namespace {\n\n";
    const auto& names = oulad::oulad_file_names();
    for (int i = 0; i < 7; ++i) {
        std::string text = slurp(dir / names[i]);
        if (text.empty() || text.find(")csv\"") != std::string::npos) {
            std::cerr << "unembeddable table text: " << names[i] << "\n";
            return 1;
        }
        out << "const char* const " << kVarNames[i] << " = R\"csv(" << text << ")csv\";\n\n";
    }
    out << "}  // namespace\n\n"
        << "const char* const kSampleCsv[7] = {\n";
    for (int i = 0; i < 7; ++i) out << "    " << kVarNames[i] << ",\n";
    out << "};\n\n"
        << "}  // namespace oulad::detail\n";
    out.close();

    std::cerr << "wrote " << argv[1] << " (" << clicks.size() << " studentVle rows, "
              << raw.student_info.size() << " students, " << raw.vle.size()
              << " sites)\n";
    return 0;
}
