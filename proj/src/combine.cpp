#include "oulad/combine.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <future>
#include <set>
#include <thread>
#include <unordered_map>

#include "oulad/errors.hpp"
#include "oulad/weeks.hpp"

namespace oulad {
namespace {

struct PairBlock {
    ModulePresentation pair;
    std::vector<StudentId> students;  // intersection, sorted
    // Per-category columns and per-student cells, aligned with `students`.
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> cells;  // students x columns
    std::size_t bucket_start = 0;  // first VLE bucket column; == columns.size() when none
    std::optional<WeekRange> effective;
    std::vector<std::string> warnings;
};

Cell opt_int_cell(const std::optional<int>& v) {
    return v ? Cell::integer(*v) : Cell::missing();
}

Cell text_or_missing(const std::string& s) {
    return s.empty() ? Cell::missing() : Cell::text(s);
}

// Column kinds drive multi-pair column alignment.
enum class ColumnKind { fixed, day, week, bucket };

int week_index_of_label(const std::string& label) {
    const std::string pre = "Week_pre-";
    if (label.compare(0, pre.size(), pre) == 0) return -std::stoi(label.substr(pre.size()));
    return std::stoi(label.substr(4));
}

// Order-preserving union for bucket columns; day and week columns sort by
// their numeric position instead.
std::vector<std::string> align_columns(const std::vector<std::vector<std::string>>& per_pair,
                                       ColumnKind kind) {
    std::vector<std::string> out;
    for (const auto& cols : per_pair) {
        for (const auto& c : cols) {
            if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
        }
    }
    if (kind == ColumnKind::day) {
        std::sort(out.begin(), out.end(),
                  [](const std::string& a, const std::string& b) {
                      return std::stoi(a) < std::stoi(b);
                  });
    } else if (kind == ColumnKind::week) {
        std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
            return week_index_of_label(a) < week_index_of_label(b);
        });
    } else if (kind == ColumnKind::bucket) {
        std::sort(out.begin(), out.end());
    }
    return out;
}

PairBlock build_pair(const ModulePresentation& pair, const RawTables& raw,
                     const CombineSpec& spec, RepeatPolicy repeat) {
    PairBlock block;
    block.pair = pair;
    const WeekRange window = spec.selector.window;

    // Base cohort: studentInfo after the repeat and withdrawn policies.
    std::vector<const StudentInfoRow*> info;
    for (const auto& s : raw.student_info) {
        if (s.code_module != pair.first || s.code_presentation != pair.second) continue;
        if (repeat == RepeatPolicy::remove && s.num_of_prev_attempts > 0) continue;
        info.push_back(&s);
    }

    std::unordered_map<std::string, const RegistrationRow*> registration;
    for (const auto& r : raw.student_registration) {
        if (r.code_module == pair.first && r.code_presentation == pair.second)
            registration.emplace(r.id_student.str(), &r);
    }

    if (spec.withdrawn_students == WithdrawnPolicy::remove) {
        std::erase_if(info, [&](const StudentInfoRow* s) {
            auto it = registration.find(s->id_student.str());
            return it != registration.end() &&
                   withdrawn_before(it->second->date_unregistration, window.end);
        });
    }

    std::set<StudentId> members;
    for (const StudentInfoRow* s : info) members.insert(s->id_student);

    auto intersect = [&members](const std::vector<StudentId>& present) {
        std::set<StudentId> keep;
        for (const auto& id : present) {
            if (members.count(id)) keep.insert(id);
        }
        members = std::move(keep);
    };

    // Build each requested category, shrinking membership as we go; cells
    // are attached after the final member set is known.
    std::optional<AssessmentBundle> bundle;
    if (spec.assessment) {
        CohortSelector one;
        one.module = pair.first;
        one.presentation = pair.second;
        one.repeat_students = repeat;
        one.window = window;
        bundle = extract_assessment(one, raw, spec.na_policy);
        std::vector<StudentId> present;
        const int id_col = bundle->performance.require_column("id_student");
        for (const auto& row : bundle->performance.rows)
            present.emplace_back(row[static_cast<std::size_t>(id_col)].text_value());
        intersect(present);
    }

    std::optional<ClickMatrix> clicks;
    std::optional<ActivityMapping> mapping_used;
    if (spec.vle != VleMode::omit) {
        VleExtract extract = vle_filtered(pair, raw, window, repeat);
        block.effective = extract.effective;
        ClickMatrix matrix;
        switch (spec.vle) {
            case VleMode::daily: matrix = pivot_daily(extract); break;
            case VleMode::weekly: matrix = pivot_weekly(extract); break;
            default: matrix = pivot_activity(extract, raw); break;
        }
        if (is_classified(spec.vle)) {
            auto mapping = load_mapping(mapping_name_of(spec.vle), spec.mapping_dir);
            auto classified = classify_activities(matrix, mapping);
            matrix = std::move(classified.matrix);
            mapping_used = std::move(classified.mapping);
            block.warnings.insert(block.warnings.end(), classified.warnings.begin(),
                                  classified.warnings.end());
        }
        matrix = convert_clicks(std::move(matrix), spec.clicks);
        intersect(matrix.students);
        clicks = std::move(matrix);
    }

    if (spec.registration) {
        std::vector<StudentId> present;
        for (const auto& [id, row] : registration) present.emplace_back(id);
        intersect(present);
    }

    block.students.assign(members.begin(), members.end());
    std::unordered_map<std::string, std::size_t> row_of;
    for (std::size_t i = 0; i < block.students.size(); ++i)
        row_of.emplace(block.students[i].str(), i);
    block.cells.assign(block.students.size(), {});

    auto add_column = [&](const std::string& name) {
        block.columns.push_back(name);
        for (auto& row : block.cells) row.push_back(Cell::missing());
    };

    if (spec.demographics) {
        for (const char* name :
             {"gender", "region", "highest_education", "imd_band", "age_band",
              "num_of_prev_attempts", "studied_credits", "disability", "final_result"})
            add_column(name);
        const std::size_t base = block.columns.size() - 9;
        for (const StudentInfoRow* s : info) {
            auto it = row_of.find(s->id_student.str());
            if (it == row_of.end()) continue;
            auto& row = block.cells[it->second];
            row[base + 0] = Cell::text(s->gender);
            row[base + 1] = text_or_missing(s->region);
            row[base + 2] = text_or_missing(s->highest_education);
            row[base + 3] = text_or_missing(s->imd_band);
            row[base + 4] = text_or_missing(s->age_band);
            row[base + 5] = Cell::integer(s->num_of_prev_attempts);
            row[base + 6] = Cell::integer(s->studied_credits);
            row[base + 7] = text_or_missing(s->disability);
            row[base + 8] = Cell::text(s->final_result);
        }
    }

    if (spec.registration) {
        add_column("date_registration");
        add_column("date_unregistration");
        const std::size_t base = block.columns.size() - 2;
        for (const auto& [id, r] : registration) {
            auto it = row_of.find(id);
            if (it == row_of.end()) continue;
            auto& row = block.cells[it->second];
            row[base + 0] = opt_int_cell(r->date_registration);
            row[base + 1] = opt_int_cell(r->date_unregistration);
        }
    }

    if (spec.assessment) {
        const FlatTable& perf = bundle->performance;
        const std::size_t base = block.columns.size();
        for (std::size_t c = 1; c < perf.columns.size(); ++c) add_column(perf.columns[c]);
        for (const auto& row : perf.rows) {
            auto it = row_of.find(row[0].text_value());
            if (it == row_of.end()) continue;
            for (std::size_t c = 1; c < perf.columns.size(); ++c)
                block.cells[it->second][base + c - 1] = row[c];
        }
        if (spec.include_reactivity) {
            const FlatTable& react = bundle->reactivity;
            const std::size_t rbase = block.columns.size();
            for (std::size_t c = 1; c < react.columns.size(); ++c)
                add_column("reactivity_" + react.columns[c]);
            for (const auto& row : react.rows) {
                auto it = row_of.find(row[0].text_value());
                if (it == row_of.end()) continue;
                for (std::size_t c = 1; c < react.columns.size(); ++c)
                    block.cells[it->second][rbase + c - 1] = row[c];
            }
        }
    }

    block.bucket_start = block.columns.size();
    if (clicks) {
        const FlatTable flat = clicks->to_flat();
        const std::size_t base = block.columns.size();
        for (std::size_t c = 1; c < flat.columns.size(); ++c) add_column(flat.columns[c]);
        for (const auto& row : flat.rows) {
            auto it = row_of.find(row[0].text_value());
            if (it == row_of.end()) continue;
            for (std::size_t c = 1; c < flat.columns.size(); ++c)
                block.cells[it->second][base + c - 1] = row[c];
        }
    }

    return block;
}

}  // namespace

const char* to_string(VleMode m) {
    switch (m) {
        case VleMode::omit: return "omit";
        case VleMode::daily: return "daily";
        case VleMode::weekly: return "weekly";
        case VleMode::activity: return "activity";
        case VleMode::fslm: return "FSLM";
        case VleMode::fslsm: return "FSLSM";
        case VleMode::ols: return "OLS";
        case VleMode::vark: return "VARK";
    }
    return "omit";
}

VleMode vle_mode_from(const std::string& s) {
    if (s == "omit") return VleMode::omit;
    if (s == "daily") return VleMode::daily;
    if (s == "weekly") return VleMode::weekly;
    if (s == "activity") return VleMode::activity;
    if (s == "FSLM") return VleMode::fslm;
    if (s == "FSLSM") return VleMode::fslsm;
    if (s == "OLS") return VleMode::ols;
    if (s == "VARK") return VleMode::vark;
    throw SpecError(
        "vle mode must be one of omit, daily, weekly, activity, FSLM, FSLSM, OLS, VARK; got '" +
        s + "'");
}

bool is_classified(VleMode m) {
    return m == VleMode::fslm || m == VleMode::fslsm || m == VleMode::ols || m == VleMode::vark;
}

std::string mapping_name_of(VleMode m) {
    if (!is_classified(m)) throw SpecError("vle mode has no mapping");
    return to_string(m);
}

CombineResult combined_dataset(const CombineSpec& spec, const RawTables& raw) {
    const bool any_category = spec.demographics || spec.registration || spec.assessment ||
                              spec.vle != VleMode::omit;
    if (!any_category)
        throw SpecError("combined dataset needs at least one data category");

    CombineResult result;
    if (spec.vle == VleMode::omit && spec.clicks != ClickFormat::total)
        result.warnings.push_back("clicks format has no effect when vle is omitted");

    RepeatPolicy repeat = spec.selector.repeat_students;
    if (spec.selector.presentation == "All" && repeat == RepeatPolicy::keep) {
        repeat = RepeatPolicy::remove;
        result.warnings.push_back(
            "repeat students are always removed when presentation is All");
    }
    result.repeat_students = repeat;
    result.pairs = resolve_selector(spec.selector, raw);
    day_window(spec.selector.window.begin, spec.selector.window.end);  // validate

    // Per-pair builds are independent; run them on a small worker pool.
    std::vector<PairBlock> blocks(result.pairs.size());
    unsigned workers = spec.threads ? spec.threads : std::thread::hardware_concurrency();
    workers = std::min<unsigned>(std::max(1u, workers),
                                 static_cast<unsigned>(result.pairs.size()));
    if (workers <= 1 || result.pairs.size() == 1) {
        for (std::size_t i = 0; i < result.pairs.size(); ++i)
            blocks[i] = build_pair(result.pairs[i], raw, spec, repeat);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::future<void>> futures;
        for (unsigned w = 0; w < workers; ++w) {
            futures.push_back(std::async(std::launch::async, [&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= blocks.size()) return;
                    blocks[i] = build_pair(result.pairs[i], raw, spec, repeat);
                }
            }));
        }
        for (auto& f : futures) f.get();
    }

    for (const auto& block : blocks) {
        result.warnings.insert(result.warnings.end(), block.warnings.begin(),
                               block.warnings.end());
        if (block.effective) {
            if (!result.effective) {
                result.effective = block.effective;
            } else {
                result.effective->begin = std::min(result.effective->begin,
                                                   block.effective->begin);
                result.effective->end = std::max(result.effective->end, block.effective->end);
            }
        }
    }

    const bool multi = result.pairs.size() > 1;
    FlatTable& table = result.table;
    if (multi) table.columns = {"code_module", "code_presentation"};
    table.columns.push_back("id_student");
    const std::size_t key_width = table.columns.size();

    // Align value columns across pairs. VLE buckets interleave by position
    // (days and weeks numerically); everything else keeps first-appearance
    // order, which is identical across pairs for fixed-name categories.
    ColumnKind kind = ColumnKind::fixed;
    if (spec.vle == VleMode::daily) kind = ColumnKind::day;
    if (spec.vle == VleMode::weekly) kind = ColumnKind::week;
    if (spec.vle == VleMode::activity || is_classified(spec.vle)) kind = ColumnKind::bucket;

    std::vector<std::vector<std::string>> per_pair_columns;
    per_pair_columns.reserve(blocks.size());
    for (const auto& block : blocks) per_pair_columns.push_back(block.columns);

    std::vector<std::string> value_columns;
    if (kind == ColumnKind::fixed) {
        value_columns = align_columns(per_pair_columns, ColumnKind::fixed);
    } else {
        // Non-bucket columns first in fixed order, then the pivot buckets
        // sorted by their numeric position. Each block records where its
        // bucket columns start, so no name sniffing is needed.
        std::vector<std::vector<std::string>> fixed_cols(blocks.size());
        std::vector<std::vector<std::string>> bucket_cols(blocks.size());
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            const auto& cols = blocks[i].columns;
            fixed_cols[i].assign(cols.begin(),
                                 cols.begin() + static_cast<std::ptrdiff_t>(blocks[i].bucket_start));
            bucket_cols[i].assign(cols.begin() + static_cast<std::ptrdiff_t>(blocks[i].bucket_start),
                                  cols.end());
        }
        value_columns = align_columns(fixed_cols, ColumnKind::fixed);
        auto buckets = align_columns(bucket_cols, kind);
        if (is_classified(spec.vle)) {
            auto master = load_mapping(mapping_name_of(spec.vle), spec.mapping_dir).categories();
            master.push_back("unclassified");
            std::vector<std::string> ordered;
            for (const auto& category : master) {
                if (std::find(buckets.begin(), buckets.end(), category) != buckets.end() &&
                    std::find(ordered.begin(), ordered.end(), category) == ordered.end())
                    ordered.push_back(category);
            }
            for (const auto& b : buckets) {
                if (std::find(ordered.begin(), ordered.end(), b) == ordered.end())
                    ordered.push_back(b);
            }
            buckets = std::move(ordered);
        }
        value_columns.insert(value_columns.end(), buckets.begin(), buckets.end());
    }

    {
        std::set<std::string> seen(table.columns.begin(), table.columns.end());
        for (const auto& c : value_columns) {
            if (!seen.insert(c).second)
                throw SpecError("column name collision in combined table: '" + c + "'");
        }
    }
    table.columns.insert(table.columns.end(), value_columns.begin(), value_columns.end());

    std::unordered_map<std::string, std::size_t> target_of;
    for (std::size_t i = 0; i < value_columns.size(); ++i)
        target_of.emplace(value_columns[i], key_width + i);

    for (const auto& block : blocks) {
        std::vector<std::size_t> col_target;
        col_target.reserve(block.columns.size());
        for (const auto& c : block.columns) col_target.push_back(target_of.at(c));
        for (std::size_t s = 0; s < block.students.size(); ++s) {
            std::vector<Cell> row(table.columns.size(), Cell::missing());
            std::size_t k = 0;
            if (multi) {
                row[k++] = Cell::text(block.pair.first);
                row[k++] = Cell::text(block.pair.second);
            }
            row[k] = Cell::text(block.students[s].str());
            for (std::size_t c = 0; c < block.columns.size(); ++c)
                row[col_target[c]] = block.cells[s][c];
            table.rows.push_back(std::move(row));
        }
    }
    return result;
}

FlatTable select_features(const FlatTable& table, const std::vector<std::string>& keep,
                          const std::vector<DeriveSpec>& derive,
                          const std::map<std::string, std::string>& rename) {
    FlatTable out = table;

    for (const auto& d : derive) {
        if (out.column(d.name) >= 0)
            throw SpecError("derived column '" + d.name + "' already exists");
        std::vector<std::size_t> sources;
        for (const auto& name : d.sources)
            sources.push_back(static_cast<std::size_t>(out.require_column(name)));
        out.columns.push_back(d.name);
        for (auto& row : out.rows) {
            bool missing = false;
            double sum = 0.0;
            bool integral = true;
            for (std::size_t s : sources) {
                const Cell& c = row[s];
                if (c.is_missing()) {
                    missing = true;
                    break;
                }
                if (!c.is_number()) throw SpecError("column '" + d.name + "' sums non-numeric data");
                if (!c.is_integer()) integral = false;
                sum += c.number();
            }
            if (missing)
                row.push_back(Cell::missing());
            else if (integral)
                row.push_back(Cell::integer(static_cast<long long>(sum)));
            else
                row.push_back(Cell::real(sum));
        }
    }

    for (const auto& [from, to] : rename) {
        const int idx = out.require_column(from);
        out.columns[static_cast<std::size_t>(idx)] = to;
    }

    if (!keep.empty()) {
        std::vector<std::size_t> indices;
        indices.reserve(keep.size());
        for (const auto& name : keep)
            indices.push_back(static_cast<std::size_t>(out.require_column(name)));
        FlatTable projected;
        projected.columns = keep;
        projected.rows.reserve(out.rows.size());
        for (const auto& row : out.rows) {
            std::vector<Cell> cells;
            cells.reserve(indices.size());
            for (std::size_t i : indices) cells.push_back(row[i]);
            projected.rows.push_back(std::move(cells));
        }
        return projected;
    }
    return out;
}

}  // namespace oulad
