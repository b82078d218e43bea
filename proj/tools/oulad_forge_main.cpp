// oulad-forge: batch toolkit over the seven OULAD tables. Every subcommand
// writes its outputs plus a run.manifest.json describing exactly what ran.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oulad/assessment.hpp"
#include "oulad/cohort.hpp"
#include "oulad/combine.hpp"
#include "oulad/demographics.hpp"
#include "oulad/errors.hpp"
#include "oulad/fetch.hpp"
#include "oulad/flat.hpp"
#include "oulad/ingest.hpp"
#include "oulad/manifest.hpp"
#include "oulad/mappings.hpp"
#include "oulad/stats.hpp"
#include "oulad/synth.hpp"
#include "oulad/version.hpp"
#include "oulad/vle.hpp"
#include "oulad/weeks.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSpec = 2;        // bad selection, bad spec, bad flags
constexpr int kExitValidation = 3;  // data fails schema or parse checks
constexpr int kExitIo = 4;          // missing files, failed downloads, disk errors

struct Config {
    std::string data_dir;
    std::string mapping_dir;
    std::string archive_url;
};

std::string trim(std::string s) {
    auto issp = [](unsigned char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!s.empty() && issp(s.front())) s.erase(s.begin());
    while (!s.empty() && issp(s.back())) s.pop_back();
    return s;
}

std::string unquote(std::string s) {
    if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                          (s.front() == '\'' && s.back() == '\'')))
        return s.substr(1, s.size() - 2);
    return s;
}

Config read_config(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw oulad::AcquisitionError("cannot open config file: " + file.string());
    Config cfg;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = trim(line.substr(0, eq));
        std::string value = unquote(trim(line.substr(eq + 1)));
        if (key == "data_dir") cfg.data_dir = value;
        else if (key == "mapping_dir") cfg.mapping_dir = value;
        else if (key == "archive_url") cfg.archive_url = value;
    }
    return cfg;
}

struct CommonOptions {
    std::string data;
    std::string out = ".";
    std::string format = "csv";
    std::string config;
    std::string mappings;
    std::string archive_url;
};

struct SelectorOptions {
    std::string module = "All";
    std::string presentation = "All";
    std::string repeat = "remove";
    int week_begin = -4;
    int week_end = 39;
};

// Effective settings after merging flags, environment, and config file.
struct Resolved {
    fs::path data_dir;
    std::optional<fs::path> mapping_dir;
    std::string archive_url;
};

Resolved resolve_common(const CommonOptions& c) {
    Config cfg;
    if (!c.config.empty()) {
        cfg = read_config(c.config);
    } else if (fs::exists("oulad-forge.toml")) {
        cfg = read_config("oulad-forge.toml");
    }
    Resolved r;
    r.data_dir = !c.data.empty() ? c.data : cfg.data_dir;
    if (!c.mappings.empty()) r.mapping_dir = c.mappings;
    else if (!cfg.mapping_dir.empty()) r.mapping_dir = cfg.mapping_dir;
    r.archive_url = !c.archive_url.empty() ? c.archive_url : cfg.archive_url;
    return r;
}

oulad::CohortSelector to_selector(const SelectorOptions& s) {
    oulad::CohortSelector sel;
    sel.module = s.module;
    sel.presentation = s.presentation;
    sel.repeat_students = oulad::repeat_policy_from(s.repeat);
    sel.window = oulad::WeekRange{s.week_begin, s.week_end};
    return sel;
}

// Tracks one subcommand execution: output files, manifest fields, timing.
class Run {
  public:
    Run(std::string subcommand, const CommonOptions& common)
        : start_(std::chrono::steady_clock::now()), out_dir_(common.out), format_(common.format) {
        manifest_.tool_version = oulad::kVersion;
        manifest_.subcommand = std::move(subcommand);
        manifest_.effective_window = nullptr;
        fs::create_directories(out_dir_);
    }

    ordered_json& spec() { return manifest_.resolved_spec; }
    void set_window(const ordered_json& w) { manifest_.effective_window = w; }

    void digest_data_dir(const fs::path& dir) {
        for (const auto& name : oulad::oulad_file_names()) digest_file(dir / name);
    }
    void digest_file(const fs::path& file) {
        manifest_.inputs.push_back(
            {file.filename().string(), fs::file_size(file), oulad::sha256_file(file)});
    }
    const std::vector<oulad::FileDigest>& inputs() const { return manifest_.inputs; }

    fs::path emit(const oulad::FlatTable& table, const std::string& stem) {
        fs::path file = out_dir_ / (stem + (format_ == "json" ? ".jsonl" : ".csv"));
        if (format_ == "json") oulad::write_flat_jsonl(table, file);
        else oulad::write_flat_csv(table, file);
        record_output(file.filename().string());
        return file;
    }

    void emit_json(const ordered_json& value, const std::string& name) {
        oulad::write_json_atomic(value, out_dir_ / name);
        record_output(name);
    }

    void record_output(const std::string& name) {
        fs::path file = out_dir_ / name;
        manifest_.outputs.push_back(
            {name, fs::file_size(file), oulad::sha256_file(file)});
    }

    const fs::path& out_dir() const { return out_dir_; }

    void finish() {
        auto elapsed = std::chrono::steady_clock::now() - start_;
        manifest_.duration_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        oulad::write_run_manifest(manifest_, out_dir_);
    }

  private:
    std::chrono::steady_clock::time_point start_;
    oulad::RunManifest manifest_;
    fs::path out_dir_;
    std::string format_;
};

oulad::RawTables load_data(const Resolved& r, Run& run) {
    if (r.data_dir.empty())
        throw oulad::AcquisitionError(
            "no data directory: pass --data, set OULAD_DATA_DIR, or configure data_dir");
    bool complete = true;
    for (const auto& name : oulad::oulad_file_names())
        if (!fs::exists(r.data_dir / name)) complete = false;
    if (!complete && !r.archive_url.empty()) oulad::fetch_archive(r.archive_url, r.data_dir);
    auto raw = oulad::load_oulad(r.data_dir);
    run.digest_data_dir(r.data_dir);
    return raw;
}

ordered_json window_json(const oulad::WeekRange& requested,
                         const std::optional<oulad::WeekRange>& effective) {
    ordered_json w;
    w["requested"] = {requested.begin, requested.end};
    if (effective) w["effective"] = {effective->begin, effective->end};
    else w["effective"] = nullptr;
    return w;
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "oulad-forge: warning: " << w << "\n";
}

oulad::FlatTable filtered_table(const oulad::VleExtract& ex) {
    oulad::FlatTable t;
    t.columns = {"code_module", "code_presentation", "id_student",
                 "id_site",     "date",              "sum_click"};
    t.rows.reserve(ex.filtered.size());
    for (const auto& r : ex.filtered)
        t.rows.push_back({oulad::Cell::text(r.code_module), oulad::Cell::text(r.code_presentation),
                          oulad::Cell::text(r.id_student.str()), oulad::Cell::integer(r.id_site),
                          oulad::Cell::integer(r.date), oulad::Cell::integer(r.sum_click)});
    return t;
}

oulad::FlatTable assessment_data_table(const std::vector<oulad::AssessmentDataRow>& rows) {
    using oulad::Cell;
    oulad::FlatTable t;
    t.columns = {"id_assessment", "id_student",        "date_submitted",  "is_banked",
                 "score",         "code_module",       "code_presentation", "assessment_type",
                 "date",          "weight",            "reactivity"};
    t.rows.reserve(rows.size());
    for (const auto& r : rows) {
        t.rows.push_back({Cell::integer(r.id_assessment), Cell::text(r.id_student.str()),
                          Cell::integer(r.date_submitted), Cell::integer(r.is_banked ? 1 : 0),
                          r.score ? Cell::real(*r.score) : Cell::missing(),
                          Cell::text(r.code_module), Cell::text(r.code_presentation),
                          Cell::text(r.assessment_type),
                          r.date ? Cell::integer(*r.date) : Cell::missing(),
                          Cell::real(r.weight),
                          r.reactivity ? Cell::integer(*r.reactivity) : Cell::missing()});
    }
    return t;
}

oulad::FlatTable schedule_table(const std::vector<oulad::ScheduleRow>& rows) {
    using oulad::Cell;
    oulad::FlatTable t;
    t.columns = {"code_module", "code_presentation", "id_assessment", "assessment_type",
                 "date",        "weight",            "effective_due", "week"};
    t.rows.reserve(rows.size());
    for (const auto& r : rows) {
        t.rows.push_back({Cell::text(r.code_module), Cell::text(r.code_presentation),
                          Cell::integer(r.id_assessment), Cell::text(r.assessment_type),
                          r.date ? Cell::integer(*r.date) : Cell::missing(), Cell::real(r.weight),
                          Cell::integer(r.effective_due), Cell::integer(r.week)});
    }
    return t;
}

oulad::FlatTable counts_table(const oulad::ContingencyTable& ct, const std::string& row_name) {
    oulad::FlatTable t;
    t.columns.push_back(row_name);
    for (const auto& c : ct.col_labels) t.columns.push_back(c);
    for (std::size_t i = 0; i < ct.row_labels.size(); ++i) {
        std::vector<oulad::Cell> row{oulad::Cell::text(ct.row_labels[i])};
        for (long long n : ct.counts[i]) row.push_back(oulad::Cell::integer(n));
        t.rows.push_back(std::move(row));
    }
    return t;
}

oulad::FlatTable proportions_table(const oulad::ContingencyTable& ct,
                                   const std::vector<std::vector<double>>& props,
                                   const std::string& row_name) {
    oulad::FlatTable t;
    t.columns.push_back(row_name);
    for (const auto& c : ct.col_labels) t.columns.push_back(c);
    for (std::size_t i = 0; i < ct.row_labels.size(); ++i) {
        std::vector<oulad::Cell> row{oulad::Cell::text(ct.row_labels[i])};
        for (double v : props[i]) row.push_back(oulad::Cell::real(v));
        t.rows.push_back(std::move(row));
    }
    return t;
}

oulad::ModulePresentation single_pair(const oulad::CohortSelector& sel,
                                      const oulad::RawTables& raw) {
    auto pairs = oulad::resolve_selector(sel, raw);
    if (pairs.size() != 1)
        throw oulad::SelectionError("this extract works on one module presentation at a time; " +
                                    sel.module + " " + sel.presentation + " names " +
                                    std::to_string(pairs.size()));
    return pairs.front();
}

CLI::Validator nonzero_week() {
    return CLI::Validator(
        [](std::string& value) -> std::string {
            if (value == "0" || value == "-0" || value == "+0")
                return "week 0 does not exist: day 0 opens Week1 and earlier days fall in "
                       "pre-1, pre-2, ... counting backwards";
            return {};
        },
        "NONZERO");
}

void add_common_flags(CLI::App* cmd, CommonOptions& c, bool with_data, bool with_format = true) {
    if (with_data) {
        cmd->add_option("--data", c.data, "Directory holding the seven OULAD CSV files")
            ->envname("OULAD_DATA_DIR");
        cmd->add_option("--archive-url", c.archive_url,
                        "Zip archive to download when the data directory is incomplete");
    }
    cmd->add_option("--out", c.out, "Output directory")->capture_default_str();
    if (with_format)
        cmd->add_option("--format", c.format, "Table output format; json means line-delimited")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
    cmd->add_option("--config", c.config,
                    "Key-value config file (default oulad-forge.toml when present)");
}

void add_selector_flags(CLI::App* cmd, SelectorOptions& s, bool with_weeks) {
    cmd->add_option("--module", s.module, "Module code, or All")->capture_default_str();
    cmd->add_option("--presentation", s.presentation, "Presentation code, or All")
        ->capture_default_str();
    cmd->add_option("--repeat", s.repeat, "Keep or remove students with previous attempts")
        ->check(CLI::IsMember({"remove", "keep"}))
        ->capture_default_str();
    if (with_weeks) {
        cmd->add_option("--week-begin", s.week_begin,
                        "First week of the window; negative weeks use --week-begin=-N")
            ->check(nonzero_week())
            ->capture_default_str();
        cmd->add_option("--week-end", s.week_end, "Last week of the window")
            ->check(nonzero_week())
            ->capture_default_str();
    }
}

ordered_json selector_spec(const SelectorOptions& s, bool with_weeks) {
    ordered_json j;
    j["module"] = s.module;
    j["presentation"] = s.presentation;
    j["repeat_students"] = s.repeat;
    if (with_weeks) {
        j["week_begin"] = s.week_begin;
        j["week_end"] = s.week_end;
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Loads, validates, filters, pivots, and combines the OULAD tables into "
                 "analysis-ready flat files"};
    app.set_version_flag("--version", std::string(oulad::kVersion));
    app.require_subcommand(1);

    CommonOptions common;
    SelectorOptions sel;
    int exit_code = kExitOk;

    // validate
    auto* validate = app.add_subcommand("validate", "Check schema and referential integrity");
    add_common_flags(validate, common, true, false);
    validate->callback([&] {
        Run run("validate", common);
        auto resolved = resolve_common(common);
        auto raw = load_data(resolved, run);
        auto report = oulad::validate_schema(raw);
        ordered_json out;
        out["violations"] = report.total_violations();
        out["rules"] = ordered_json::object();
        for (const auto& [rule, details] : report.violations) out["rules"][rule] = details;
        run.spec()["data_dir"] = resolved.data_dir.string();
        run.emit_json(out, "validation.report.json");
        run.finish();
        if (report.total_violations() == 0) {
            std::cout << "schema ok: " << raw.student_info.size() << " students across "
                      << raw.courses.size() << " presentations\n";
        } else {
            for (const auto& [rule, details] : report.violations)
                std::cout << rule << ": " << details.size() << " violation(s)\n";
            exit_code = kExitValidation;
        }
    });

    // sample
    auto* sample = app.add_subcommand("sample", "Write the bundled synthetic sample tables");
    add_common_flags(sample, common, false, false);
    sample->callback([&] {
        Run run("sample", common);
        run.spec()["source"] = "bundled sample";
        oulad::write_oulad(oulad::load_sample(), run.out_dir());
        for (const auto& name : oulad::oulad_file_names()) run.record_output(name);
        run.finish();
        std::cout << "wrote 7 tables to " << run.out_dir().string() << "\n";
    });

    // synth
    auto* synth = app.add_subcommand("synth", "Generate a synthetic OULAD-shaped dataset");
    std::uint64_t synth_seed = 42;
    int synth_students = 50;
    int synth_sites = 12;
    double synth_density = 0.2;
    double synth_withdrawal = 0.1;
    double synth_repeat = 0.1;
    add_common_flags(synth, common, false, false);
    synth->add_option("--seed", synth_seed, "Generator seed")->capture_default_str();
    synth->add_option("--students", synth_students, "Students per presentation")
        ->capture_default_str();
    synth->add_option("--sites", synth_sites, "VLE sites per presentation")->capture_default_str();
    synth->add_option("--click-density", synth_density, "Chance a student clicks on a given day")
        ->capture_default_str();
    synth->add_option("--withdrawal-rate", synth_withdrawal, "Share of students who withdraw")
        ->capture_default_str();
    synth->add_option("--repeat-rate", synth_repeat, "Share of students with prior attempts")
        ->capture_default_str();
    synth->callback([&] {
        Run run("synth", common);
        oulad::SynthSpec spec = oulad::default_synth_spec();
        spec.seed = synth_seed;
        spec.n_students = synth_students;
        spec.n_sites = synth_sites;
        spec.click_density = synth_density;
        spec.withdrawal_rate = synth_withdrawal;
        spec.repeat_rate = synth_repeat;
        run.spec()["seed"] = spec.seed;
        run.spec()["students"] = spec.n_students;
        run.spec()["sites"] = spec.n_sites;
        run.spec()["click_density"] = spec.click_density;
        run.spec()["withdrawal_rate"] = spec.withdrawal_rate;
        run.spec()["repeat_rate"] = spec.repeat_rate;
        auto result = oulad::generate_synthetic(spec);
        oulad::write_oulad(result.tables, run.out_dir());
        for (const auto& name : oulad::oulad_file_names()) run.record_output(name);
        run.finish();
        std::cout << "wrote 7 tables to " << run.out_dir().string() << " ("
                  << result.tables.student_vle.size() << " clickstream rows)\n";
    });

    // demographics
    auto* demo = app.add_subcommand("demographics", "Extract per-student demographics");
    add_common_flags(demo, common, true);
    add_selector_flags(demo, sel, false);
    demo->callback([&] {
        Run run("demographics", common);
        auto raw = load_data(resolve_common(common), run);
        auto ex = oulad::extract_demographics(to_selector(sel), raw);
        run.spec() = selector_spec(sel, false);
        auto file = run.emit(ex.table, "demographics");
        run.finish();
        std::cout << file.filename().string() << ": " << ex.table.rows.size() << " rows\n";
    });

    // registration
    auto* reg = app.add_subcommand("registration", "Extract registration dates");
    add_common_flags(reg, common, true);
    add_selector_flags(reg, sel, false);
    reg->callback([&] {
        Run run("registration", common);
        auto raw = load_data(resolve_common(common), run);
        auto ex = oulad::extract_registration(to_selector(sel), raw);
        run.spec() = selector_spec(sel, false);
        auto file = run.emit(ex.table, "registration");
        run.finish();
        std::cout << file.filename().string() << ": " << ex.table.rows.size() << " rows\n";
    });

    // assessment
    auto* assess = app.add_subcommand(
        "assessment", "Build assessment rows, schedule, performance, and reactivity tables");
    std::string na_policy = "zero";
    add_common_flags(assess, common, true);
    add_selector_flags(assess, sel, true);
    assess->add_option("--na-policy", na_policy, "How missing scores enter the weighted average")
        ->check(CLI::IsMember({"zero", "drop"}))
        ->capture_default_str();
    assess->callback([&] {
        Run run("assessment", common);
        auto raw = load_data(resolve_common(common), run);
        auto bundle =
            oulad::extract_assessment(to_selector(sel), raw, oulad::na_policy_from(na_policy));
        run.spec() = selector_spec(sel, true);
        run.spec()["na_policy"] = na_policy;
        run.set_window(window_json(bundle.window, std::nullopt));
        run.emit(assessment_data_table(bundle.data), "assessment_data");
        run.emit(schedule_table(bundle.schedule), "assessments");
        run.emit(bundle.performance, "assessment_performance");
        run.emit(bundle.reactivity, "assessment_reactivity");
        run.finish();
        std::cout << "assessment_data: " << bundle.data.size() << " rows; performance: "
                  << bundle.performance.rows.size() << " students\n";
    });

    // vle-time
    auto* vle_time =
        app.add_subcommand("vle-time", "Filter the clickstream and pivot by day and week");
    std::string clicks = "total";
    add_common_flags(vle_time, common, true);
    add_selector_flags(vle_time, sel, true);
    vle_time->add_option("--clicks", clicks, "Cell conversion applied to the pivots")
        ->check(CLI::IsMember({"total", "binary", "standardise1", "standardise2", "logarithmic"}))
        ->capture_default_str();
    vle_time->callback([&] {
        Run run("vle-time", common);
        auto raw = load_data(resolve_common(common), run);
        auto selector = to_selector(sel);
        auto pair = single_pair(selector, raw);
        auto ex = oulad::vle_filtered(pair, raw, selector.window, selector.repeat_students);
        auto format = oulad::click_format_from(clicks);
        run.spec() = selector_spec(sel, true);
        run.spec()["module"] = pair.first;
        run.spec()["presentation"] = pair.second;
        run.spec()["clicks"] = clicks;
        run.set_window(window_json(ex.requested, ex.effective));
        run.emit(filtered_table(ex), "vle_filtered");
        run.emit(oulad::convert_clicks(oulad::pivot_daily(ex), format).to_flat(), "vle_daily");
        run.emit(oulad::convert_clicks(oulad::pivot_weekly(ex), format).to_flat(), "vle_weekly");
        run.finish();
        std::cout << "filtered " << ex.filtered.size() << " clickstream rows\n";
    });

    // vle-activity
    auto* vle_act =
        app.add_subcommand("vle-activity", "Pivot clicks by activity type or mapped category");
    std::string vle_mode = "activity";
    add_common_flags(vle_act, common, true);
    vle_act->add_option("--mappings", common.mappings,
                        "Directory of mapping files overriding the built-ins");
    add_selector_flags(vle_act, sel, true);
    vle_act->add_option("--clicks", clicks, "Cell conversion applied to the pivots")
        ->check(CLI::IsMember({"total", "binary", "standardise1", "standardise2", "logarithmic"}))
        ->capture_default_str();
    vle_act
        ->add_option("--vle", vle_mode, "activity, or a mapping name to classify by category")
        ->check(CLI::IsMember({"activity", "FSLM", "FSLSM", "OLS", "VARK"}))
        ->capture_default_str();
    vle_act->callback([&] {
        Run run("vle-activity", common);
        auto resolved = resolve_common(common);
        auto raw = load_data(resolved, run);
        auto selector = to_selector(sel);
        auto pair = single_pair(selector, raw);
        auto ex = oulad::vle_filtered(pair, raw, selector.window, selector.repeat_students);
        auto format = oulad::click_format_from(clicks);
        run.spec() = selector_spec(sel, true);
        run.spec()["module"] = pair.first;
        run.spec()["presentation"] = pair.second;
        run.spec()["clicks"] = clicks;
        run.spec()["vle"] = vle_mode;
        run.set_window(window_json(ex.requested, ex.effective));
        run.emit(filtered_table(ex), "vle_filtered");
        auto activity = oulad::pivot_activity(ex, raw);
        run.emit(oulad::convert_clicks(activity, format).to_flat(), "vle_activity");
        if (vle_mode != "activity") {
            auto mapping = oulad::load_mapping(vle_mode, resolved.mapping_dir);
            auto classified = oulad::classify_activities(activity, mapping);
            print_warnings(classified.warnings);
            run.spec()["mapping_source"] = classified.mapping.source;
            run.emit(oulad::convert_clicks(classified.matrix, format).to_flat(), "vle_classified");
        }
        run.finish();
        std::cout << "filtered " << ex.filtered.size() << " clickstream rows\n";
    });

    // combine
    auto* combine =
        app.add_subcommand("combine", "Join selected categories into one row per student");
    std::string withdrawn = "keep";
    std::string combine_vle = "omit";
    bool want_demographics = false;
    bool want_registration = false;
    bool want_assessment = false;
    bool want_reactivity = false;
    unsigned threads = 0;
    add_common_flags(combine, common, true);
    combine->add_option("--mappings", common.mappings,
                        "Directory of mapping files overriding the built-ins");
    add_selector_flags(combine, sel, true);
    combine->add_option("--withdrawn", withdrawn, "Keep or remove students who unregistered")
        ->check(CLI::IsMember({"remove", "keep"}))
        ->capture_default_str();
    combine->add_flag("--demographics", want_demographics, "Include demographic columns");
    combine->add_flag("--registration", want_registration, "Include registration columns");
    combine->add_flag("--assessment", want_assessment, "Include assessment scores");
    combine->add_flag("--reactivity", want_reactivity, "Append per-assessment reactivity");
    combine->add_option("--vle", combine_vle, "Clickstream shape to include")
        ->check(CLI::IsMember(
            {"omit", "daily", "weekly", "activity", "FSLM", "FSLSM", "OLS", "VARK"}))
        ->capture_default_str();
    combine->add_option("--clicks", clicks, "Cell conversion for clickstream columns")
        ->check(CLI::IsMember({"total", "binary", "standardise1", "standardise2", "logarithmic"}))
        ->capture_default_str();
    combine->add_option("--na-policy", na_policy, "How missing scores enter the weighted average")
        ->check(CLI::IsMember({"zero", "drop"}))
        ->capture_default_str();
    combine->add_option("--threads", threads, "Worker cap for per-presentation assembly")
        ->capture_default_str();
    combine->callback([&] {
        Run run("combine", common);
        auto resolved = resolve_common(common);
        auto raw = load_data(resolved, run);
        oulad::CombineSpec spec;
        spec.selector = to_selector(sel);
        spec.withdrawn_students = oulad::withdrawn_policy_from(withdrawn);
        spec.demographics = want_demographics;
        spec.registration = want_registration;
        spec.assessment = want_assessment;
        spec.vle = oulad::vle_mode_from(combine_vle);
        spec.clicks = oulad::click_format_from(clicks);
        spec.na_policy = oulad::na_policy_from(na_policy);
        spec.include_reactivity = want_reactivity;
        spec.mapping_dir = resolved.mapping_dir;
        spec.threads = threads;
        auto result = oulad::combined_dataset(spec, raw);
        print_warnings(result.warnings);

        ordered_json spec_json = selector_spec(sel, true);
        spec_json["repeat_students"] = to_string(result.repeat_students);
        spec_json["withdrawn_students"] = withdrawn;
        spec_json["demographics"] = want_demographics;
        spec_json["registration"] = want_registration;
        spec_json["assessment"] = want_assessment;
        spec_json["vle"] = combine_vle;
        spec_json["clicks"] = clicks;
        spec_json["na_policy"] = na_policy;
        spec_json["include_reactivity"] = want_reactivity;
        run.spec() = spec_json;
        auto window = window_json(spec.selector.window, result.effective);
        run.set_window(window);
        auto file = run.emit(result.table, "combined");

        ordered_json meta;
        meta["resolved_spec"] = spec_json;
        ordered_json pairs = ordered_json::array();
        for (const auto& p : result.pairs) pairs.push_back({p.first, p.second});
        meta["pairs"] = pairs;
        meta["effective_window"] = window;
        meta["rows"] = result.table.rows.size();
        meta["columns"] = result.table.columns.size();
        ordered_json inputs = ordered_json::array();
        for (const auto& d : run.inputs())
            inputs.push_back({{"name", d.name}, {"size", d.size}, {"sha256", d.sha256}});
        meta["inputs"] = inputs;
        meta["warnings"] = result.warnings;
        run.emit_json(meta, "combined.meta.json");
        run.finish();
        std::cout << file.filename().string() << ": " << result.table.rows.size() << " rows, "
                  << result.table.columns.size() << " columns\n";
    });

    // stats-chisq
    auto* chisq = app.add_subcommand(
        "stats-chisq", "Cross-tabulate two columns of a flat table and test independence");
    std::string in_file;
    std::string row_col;
    std::string col_col;
    std::vector<std::string> row_order;
    std::vector<std::string> col_order;
    bool include_missing = false;
    add_common_flags(chisq, common, false);
    chisq->add_option("--in", in_file, "Flat CSV table to read")->required();
    chisq->add_option("--row", row_col, "Row variable")->required();
    chisq->add_option("--col", col_col, "Column variable")->required();
    chisq->add_option("--row-order", row_order, "Leading row levels, comma separated")
        ->delimiter(',');
    chisq->add_option("--col-order", col_order, "Leading column levels, comma separated")
        ->delimiter(',');
    chisq->add_flag("--include-missing", include_missing,
                    "Count missing values as a (missing) level");
    chisq->callback([&] {
        Run run("stats-chisq", common);
        run.digest_file(in_file);
        auto table = oulad::read_flat_csv(in_file);
        auto ct = oulad::crosstab(table, row_col, col_col, include_missing, row_order, col_order);
        auto result = oulad::chi_square_test(ct);
        auto props = oulad::row_proportions(ct);
        run.spec()["in"] = in_file;
        run.spec()["row"] = row_col;
        run.spec()["col"] = col_col;
        run.spec()["row_order"] = row_order;
        run.spec()["col_order"] = col_order;
        run.spec()["include_missing"] = include_missing;
        ordered_json out;
        out["statistic"] = result.statistic;
        out["df"] = result.df;
        out["p_value"] = result.p_value;
        run.emit_json(out, "chisq.json");
        run.emit(counts_table(ct, row_col), "crosstab");
        run.emit(proportions_table(ct, props, row_col), "proportions");
        run.finish();
        std::cout << out.dump() << "\n";
    });

    // split
    auto* split = app.add_subcommand(
        "split", "Deterministic stratified train/test split of a flat table");
    std::string label_col;
    double proportion = 0.7;
    std::uint64_t split_seed = 42;
    bool complete_only = false;
    add_common_flags(split, common, false);
    split->add_option("--in", in_file, "Flat CSV table to read")->required();
    split->add_option("--label", label_col, "Stratification column")->required();
    split->add_option("--proportion", proportion, "Share of each class assigned to train")
        ->capture_default_str();
    split->add_option("--seed", split_seed, "Shuffle seed")->capture_default_str();
    split->add_flag("--complete-cases", complete_only, "Drop rows with any missing cell first");
    split->callback([&] {
        Run run("split", common);
        run.digest_file(in_file);
        auto table = oulad::read_flat_csv(in_file);
        if (complete_only) table = oulad::complete_cases(table);
        auto result = oulad::stratified_split(table, label_col, proportion, split_seed);
        print_warnings(result.warnings);
        run.spec()["in"] = in_file;
        run.spec()["label"] = label_col;
        run.spec()["proportion"] = proportion;
        run.spec()["seed"] = split_seed;
        run.spec()["complete_cases"] = complete_only;
        run.emit(result.train, "train");
        run.emit(result.test, "test");
        run.finish();
        std::cout << "train: " << result.train.rows.size() << " rows; test: "
                  << result.test.rows.size() << " rows\n";
    });

    try {
        app.parse(argc, argv);
        return exit_code;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitSpec;
    } catch (const oulad::SelectionError& e) {
        std::cerr << "oulad-forge: error: " << e.what() << "\n";
        return kExitSpec;
    } catch (const oulad::SpecError& e) {
        std::cerr << "oulad-forge: error: " << e.what() << "\n";
        return kExitSpec;
    } catch (const oulad::ValidationError& e) {
        std::cerr << "oulad-forge: error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const oulad::ParseError& e) {
        std::cerr << "oulad-forge: error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const oulad::AcquisitionError& e) {
        std::cerr << "oulad-forge: error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "oulad-forge: error: " << e.what() << "\n";
        return kExitIo;
    }
}
