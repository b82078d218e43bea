// End-to-end checks of the oulad-forge binary. The first argument names the
// binary under test; everything after it goes to doctest. Each case runs
// real subcommands inside a throwaway directory and inspects exit codes,
// emitted files, and manifests.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

std::string g_binary;

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') out += "'\\''";
        else out += c;
    }
    out += "'";
    return out;
}

struct TempDir {
    fs::path path;

    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("oulad-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
};

std::string slurp(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

// Runs the binary with a scrubbed OULAD_DATA_DIR plus any overrides given,
// capturing both streams.
CliResult run_cli(const std::vector<std::string>& args, const fs::path& cwd,
                  const std::vector<std::pair<std::string, std::string>>& env = {}) {
    TempDir capture;
    fs::path out_file = capture.path / "out";
    fs::path err_file = capture.path / "err";

    std::string command = "cd " + shell_quote(cwd.string()) + " && env -u OULAD_DATA_DIR";
    for (const auto& [key, value] : env) command += " " + shell_quote(key + "=" + value);
    command += " " + shell_quote(g_binary);
    for (const auto& arg : args) command += " " + shell_quote(arg);
    command += " > " + shell_quote(out_file.string()) + " 2> " + shell_quote(err_file.string());

    int status = std::system(command.c_str());
    CliResult result;
    if (WIFEXITED(status)) result.code = WEXITSTATUS(status);
    result.out = slurp(out_file);
    result.err = slurp(err_file);
    return result;
}

// Sample dataset shared by the cases that only read it.
const fs::path& sample_data() {
    static TempDir holder;
    static bool built = false;
    if (!built) {
        auto r = run_cli({"sample", "--out", holder.path.string()}, holder.path);
        REQUIRE(r.code == 0);
        built = true;
    }
    return holder.path;
}

std::size_t line_count(const fs::path& file) {
    std::string text = slurp(file);
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

std::string header_of(const fs::path& file) {
    std::string text = slurp(file);
    return text.substr(0, text.find('\n'));
}

}  // namespace

TEST_CASE("sample writes a dataset that validate accepts") {
    TempDir tmp;
    fs::path data = tmp.path / "data";
    auto sample = run_cli({"sample", "--out", data.string()}, tmp.path);
    CHECK(sample.code == 0);
    CHECK(sample.out.find("wrote 7 tables") != std::string::npos);
    for (const char* name : {"courses.csv", "assessments.csv", "vle.csv", "studentInfo.csv",
                             "studentRegistration.csv", "studentAssessment.csv", "studentVle.csv"})
        CHECK(fs::exists(data / name));

    fs::path val = tmp.path / "val";
    auto validate =
        run_cli({"validate", "--data", data.string(), "--out", val.string()}, tmp.path);
    CHECK(validate.code == 0);
    CHECK(validate.out.find("schema ok") != std::string::npos);
    auto report = nlohmann::json::parse(slurp(val / "validation.report.json"));
    CHECK(report["violations"] == 0);
}

TEST_CASE("validate exits 3 and names the broken rule") {
    TempDir tmp;
    fs::path data = tmp.path / "data";
    REQUIRE(run_cli({"sample", "--out", data.string()}, tmp.path).code == 0);
    std::ofstream(data / "studentVle.csv", std::ios::app) << "AAA,2013J,14000,999999,5,3\n";

    fs::path val = tmp.path / "val";
    auto r = run_cli({"validate", "--data", data.string(), "--out", val.string()}, tmp.path);
    CHECK(r.code == 3);
    CHECK(r.out.find("site_reference") != std::string::npos);
    auto report = nlohmann::json::parse(slurp(val / "validation.report.json"));
    CHECK(report["violations"].get<int>() >= 1);
}

TEST_CASE("malformed CSV exits 3 and names the file") {
    TempDir tmp;
    fs::path data = tmp.path / "data";
    REQUIRE(run_cli({"sample", "--out", data.string()}, tmp.path).code == 0);
    std::ofstream(data / "courses.csv", std::ios::trunc) << "code_module\nAAA\n";

    auto r = run_cli({"validate", "--data", data.string(), "--out", (tmp.path / "v").string()},
                     tmp.path);
    CHECK(r.code == 3);
    CHECK(r.err.find("courses.csv") != std::string::npos);
}

TEST_CASE("data acquisition failures exit 4") {
    TempDir tmp;
    SUBCASE("directory without the files") {
        auto r = run_cli({"demographics", "--data", (tmp.path / "nowhere").string(), "--out",
                          (tmp.path / "out").string()},
                         tmp.path);
        CHECK(r.code == 4);
        CHECK(r.err.find("courses.csv") != std::string::npos);
    }
    SUBCASE("no data source configured at all") {
        auto r = run_cli({"demographics", "--out", (tmp.path / "out").string()}, tmp.path);
        CHECK(r.code == 4);
        CHECK(r.err.find("no data directory") != std::string::npos);
    }
}

TEST_CASE("argument errors exit 2") {
    TempDir tmp;
    SUBCASE("week zero") {
        auto r = run_cli({"vle-time", "--data", sample_data().string(), "--out",
                          (tmp.path / "out").string(), "--week-begin", "0"},
                         tmp.path);
        CHECK(r.code == 2);
        CHECK(r.err.find("week 0 does not exist") != std::string::npos);
    }
    SUBCASE("unknown module") {
        auto r = run_cli({"demographics", "--data", sample_data().string(), "--out",
                          (tmp.path / "out").string(), "--module", "ZZZ"},
                         tmp.path);
        CHECK(r.code == 2);
        CHECK(r.err.find("ZZZ") != std::string::npos);
    }
    SUBCASE("unknown flag") {
        auto r = run_cli({"demographics", "--frobnicate"}, tmp.path);
        CHECK(r.code == 2);
    }
    SUBCASE("help exits 0") {
        auto r = run_cli({"--help"}, tmp.path);
        CHECK(r.code == 0);
        CHECK(r.out.find("validate") != std::string::npos);
    }
}

TEST_CASE("demographics emits the table and a run manifest") {
    TempDir tmp;
    fs::path out = tmp.path / "out";
    auto r = run_cli({"demographics", "--data", sample_data().string(), "--out", out.string()},
                     tmp.path);
    CHECK(r.code == 0);
    CHECK(header_of(out / "demographics.csv").find("id_student") != std::string::npos);
    CHECK(header_of(out / "demographics.csv").find("final_result") != std::string::npos);

    auto manifest = nlohmann::json::parse(slurp(out / "run.manifest.json"));
    CHECK(manifest["subcommand"] == "demographics");
    CHECK(manifest["inputs"].size() == 7);
    CHECK(manifest["outputs"].size() == 1);
    CHECK(manifest["outputs"][0]["name"] == "demographics.csv");
    CHECK(manifest["outputs"][0]["sha256"].get<std::string>().size() == 64);
}

TEST_CASE("json format swaps tables to line-delimited JSON") {
    TempDir tmp;
    fs::path out = tmp.path / "out";
    auto r = run_cli({"registration", "--data", sample_data().string(), "--out", out.string(),
                      "--format", "json"},
                     tmp.path);
    CHECK(r.code == 0);
    CHECK_FALSE(fs::exists(out / "registration.csv"));
    std::istringstream lines(slurp(out / "registration.jsonl"));
    std::string line;
    std::size_t parsed = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        auto row = nlohmann::json::parse(line);
        CHECK(row.contains("id_student"));
        ++parsed;
    }
    CHECK(parsed > 0);
}

TEST_CASE("table outputs are byte-identical across reruns") {
    TempDir tmp;
    fs::path first = tmp.path / "first";
    fs::path second = tmp.path / "second";
    for (const auto& out : {first, second}) {
        auto r = run_cli({"combine", "--data", sample_data().string(), "--out", out.string(),
                          "--demographics", "--assessment", "--vle", "weekly"},
                         tmp.path);
        REQUIRE(r.code == 0);
    }
    CHECK(slurp(first / "combined.csv") == slurp(second / "combined.csv"));
}

TEST_CASE("assessment emits data, schedule, performance, and reactivity") {
    TempDir tmp;
    fs::path out = tmp.path / "out";
    auto r = run_cli({"assessment", "--data", sample_data().string(), "--out", out.string()},
                     tmp.path);
    CHECK(r.code == 0);
    CHECK(fs::exists(out / "assessment_data.csv"));
    CHECK(fs::exists(out / "assessment_performance.csv"));
    CHECK(fs::exists(out / "assessment_reactivity.csv"));
    CHECK(header_of(out / "assessments.csv").find("effective_due") != std::string::npos);
    CHECK(line_count(out / "assessments.csv") == 6);  // header + five scheduled assessments
    CHECK(header_of(out / "assessment_performance.csv").find("average_CA_score") !=
          std::string::npos);
}

TEST_CASE("vle-time writes the filtered stream and both pivots") {
    TempDir tmp;
    fs::path out = tmp.path / "out";
    auto r = run_cli({"vle-time", "--data", sample_data().string(), "--out", out.string(),
                      "--week-begin", "-2", "--week-end", "3"},
                     tmp.path);
    CHECK(r.code == 0);
    CHECK(fs::exists(out / "vle_filtered.csv"));
    CHECK(fs::exists(out / "vle_daily.csv"));
    CHECK(fs::exists(out / "vle_weekly.csv"));

    auto manifest = nlohmann::json::parse(slurp(out / "run.manifest.json"));
    CHECK(manifest["effective_window"]["requested"][0] == -2);
    CHECK(manifest["effective_window"]["requested"][1] == 3);
    CHECK(manifest["resolved_spec"]["module"] == "AAA");
}

TEST_CASE("vle-activity classifies clicks under a mapping") {
    TempDir tmp;
    fs::path out = tmp.path / "out";
    auto r = run_cli({"vle-activity", "--data", sample_data().string(), "--out", out.string(),
                      "--vle", "VARK"},
                     tmp.path);
    CHECK(r.code == 0);
    CHECK(fs::exists(out / "vle_activity.csv"));
    std::string header = header_of(out / "vle_classified.csv");
    CHECK(header.find("id_student") != std::string::npos);
    for (const char* category : {"visual", "aural", "read_write", "kinesthetic"})
        CHECK(header.find(category) != std::string::npos);
}

TEST_CASE("combine writes the flat table with its meta sidecar") {
    TempDir tmp;
    fs::path out = tmp.path / "out";
    auto r = run_cli({"combine", "--data", sample_data().string(), "--out", out.string(),
                      "--demographics", "--registration", "--assessment", "--vle", "weekly"},
                     tmp.path);
    CHECK(r.code == 0);

    auto meta = nlohmann::json::parse(slurp(out / "combined.meta.json"));
    CHECK(meta["rows"].get<int>() > 0);
    CHECK(meta["pairs"].size() == 1);
    CHECK(meta["resolved_spec"]["vle"] == "weekly");
    CHECK(meta["inputs"].size() == 7);

    std::string header = header_of(out / "combined.csv");
    CHECK(header.find("id_student") != std::string::npos);
    CHECK(header.find("gender") != std::string::npos);
    CHECK(header.find("average_CA_score") != std::string::npos);
    std::size_t fields = 1 + std::count(header.begin(), header.end(), ',');
    CHECK(meta["columns"].get<std::size_t>() == fields);
    CHECK(static_cast<std::size_t>(meta["rows"].get<int>()) ==
          line_count(out / "combined.csv") - 1);
}

TEST_CASE("stats-chisq reads a flat table and reports the test") {
    TempDir tmp;
    fs::path combined = tmp.path / "combined";
    REQUIRE(run_cli({"combine", "--data", sample_data().string(), "--out", combined.string(),
                     "--demographics"},
                    tmp.path)
                .code == 0);

    fs::path out = tmp.path / "stats";
    auto r = run_cli({"stats-chisq", "--in", (combined / "combined.csv").string(), "--row",
                      "final_result", "--col", "gender", "--out", out.string()},
                     tmp.path);
    CHECK(r.code == 0);
    auto printed = nlohmann::json::parse(r.out);
    CHECK(printed.contains("statistic"));
    CHECK(printed.contains("p_value"));
    CHECK(printed["df"].get<int>() >= 1);
    CHECK(fs::exists(out / "chisq.json"));
    CHECK(fs::exists(out / "crosstab.csv"));
    CHECK(fs::exists(out / "proportions.csv"));
}

TEST_CASE("split partitions deterministically") {
    TempDir tmp;
    fs::path combined = tmp.path / "combined";
    REQUIRE(run_cli({"combine", "--data", sample_data().string(), "--out", combined.string(),
                     "--demographics"},
                    tmp.path)
                .code == 0);

    fs::path first = tmp.path / "s1";
    fs::path second = tmp.path / "s2";
    for (const auto& out : {first, second}) {
        auto r = run_cli({"split", "--in", (combined / "combined.csv").string(), "--label",
                          "final_result", "--proportion", "0.7", "--seed", "9", "--out",
                          out.string()},
                         tmp.path);
        REQUIRE(r.code == 0);
    }
    CHECK(slurp(first / "train.csv") == slurp(second / "train.csv"));
    CHECK(slurp(first / "test.csv") == slurp(second / "test.csv"));
    CHECK(line_count(first / "train.csv") + line_count(first / "test.csv") ==
          line_count(combined / "combined.csv") + 1);  // one extra header
}

TEST_CASE("data directory resolution prefers flag, then env, then config") {
    TempDir tmp;
    fs::path out = tmp.path / "out";

    SUBCASE("environment variable") {
        auto r = run_cli({"demographics", "--out", out.string()}, tmp.path,
                         {{"OULAD_DATA_DIR", sample_data().string()}});
        CHECK(r.code == 0);
        CHECK(fs::exists(out / "demographics.csv"));
    }
    SUBCASE("config file in the working directory") {
        std::ofstream(tmp.path / "oulad-forge.toml")
            << "data_dir = \"" << sample_data().string() << "\"\n";
        auto r = run_cli({"demographics", "--out", out.string()}, tmp.path);
        CHECK(r.code == 0);
        CHECK(fs::exists(out / "demographics.csv"));
    }
    SUBCASE("explicit config path") {
        fs::path cfg = tmp.path / "custom.toml";
        std::ofstream(cfg) << "data_dir = \"" << sample_data().string() << "\"\n";
        auto r = run_cli({"demographics", "--out", out.string(), "--config", cfg.string()},
                         tmp.path);
        CHECK(r.code == 0);
    }
    SUBCASE("flag beats a bogus environment value") {
        auto r = run_cli({"demographics", "--data", sample_data().string(), "--out", out.string()},
                         tmp.path, {{"OULAD_DATA_DIR", (tmp.path / "bogus").string()}});
        CHECK(r.code == 0);
    }
    SUBCASE("a bogus environment value by itself fails") {
        auto r = run_cli({"demographics", "--out", out.string()}, tmp.path,
                         {{"OULAD_DATA_DIR", (tmp.path / "bogus").string()}});
        CHECK(r.code == 4);
    }
}

int main(int argc, char** argv) {
    if (argc < 2 || !fs::exists(argv[1])) {
        std::cerr << "usage: cli_driver /path/to/oulad-forge [doctest options]\n";
        return 2;
    }
    g_binary = fs::absolute(argv[1]).string();

    std::vector<char*> doctest_args;
    doctest_args.push_back(argv[0]);
    for (int i = 2; i < argc; ++i) doctest_args.push_back(argv[i]);

    doctest::Context context(static_cast<int>(doctest_args.size()), doctest_args.data());
    return context.run();
}
