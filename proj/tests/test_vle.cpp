#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "oulad/errors.hpp"
#include "oulad/synth.hpp"
#include "oulad/vle.hpp"
#include "oulad/weeks.hpp"

using namespace oulad;

namespace {

RawTables fixture(std::uint64_t seed = 17, int students = 20) {
    SynthSpec spec = default_synth_spec();
    spec.seed = seed;
    spec.n_students = students;
    spec.click_density = 0.25;
    return generate_synthetic(spec).tables;
}

const ModulePresentation kPair{"AAA", "2013J"};

// Library matrix cell by student and column label; missing column -> 0.
double cell_of(const ClickMatrix& m, const std::string& student, const std::string& column) {
    for (std::size_t r = 0; r < m.students.size(); ++r) {
        if (m.students[r].str() != student) continue;
        for (std::size_t c = 0; c < m.columns.size(); ++c)
            if (m.columns[c] == column) return m.cells[r][c];
        return 0.0;
    }
    return -1.0;  // student absent
}

ClickMatrix random_matrix(std::mt19937_64& gen) {
    ClickMatrix m;
    std::size_t cols = 1 + gen() % 6;
    std::size_t rows = 2 + gen() % 20;
    for (std::size_t c = 0; c < cols; ++c) m.columns.push_back("c" + std::to_string(c));
    for (std::size_t r = 0; r < rows; ++r) {
        m.students.push_back(StudentId(std::to_string(1000 + r)));
        std::vector<double> row;
        for (std::size_t c = 0; c < cols; ++c) {
            if (c == 0 && gen() % 3 == 0) row.push_back(4.0);  // sometimes constant column
            else row.push_back(static_cast<double>(gen() % 30));
        }
        m.cells.push_back(std::move(row));
    }
    return m;
}

}  // namespace

TEST_CASE("filtering matches the oracle row for row") {
    auto raw = fixture();
    for (auto [wb, we] : {std::pair{-4, 39}, {-2, 3}, {1, 1}, {-4, -1}}) {
        auto ex = vle_filtered(kPair, raw, WeekRange{wb, we}, RepeatPolicy::remove);
        auto expected = oracle::filter_clicks(raw, "AAA", "2013J", wb, we, true);
        CHECK(ex.filtered.size() == expected.rows.size());
        if (expected.rows.empty()) {
            CHECK_FALSE(ex.effective.has_value());
        } else {
            REQUIRE(ex.effective.has_value());
            CHECK(ex.effective->begin == *expected.effective_begin);
            CHECK(ex.effective->end == *expected.effective_end);
        }
    }
}

TEST_CASE("unknown pair or invalid window is rejected") {
    auto raw = fixture();
    CHECK_THROWS_AS(vle_filtered({"AAA", "2020J"}, raw, WeekRange{1, 4}, RepeatPolicy::keep),
                    SelectionError);
    CHECK_THROWS_AS(vle_filtered(kPair, raw, WeekRange{0, 4}, RepeatPolicy::keep), SpecError);
}

TEST_CASE("daily pivot cells equal oracle sums and columns span the decided range") {
    auto raw = fixture();
    auto ex = vle_filtered(kPair, raw, WeekRange{-2, 6}, RepeatPolicy::keep);
    auto daily = pivot_daily(ex);
    auto expected = oracle::daily_cells(oracle::filter_clicks(raw, "AAA", "2013J", -2, 6, false));

    REQUIRE(daily.students.size() == expected.size());
    for (const auto& [student, days] : expected)
        for (const auto& [day, clicks] : days)
            CHECK(cell_of(daily, student, std::to_string(day)) == clicks);

    // columns run from the first observed day to the end of the effective
    // last week, one per day, even where nobody clicked
    int min_day = 1 << 30;
    for (const auto& r : ex.filtered) min_day = std::min(min_day, r.date);
    REQUIRE(ex.effective.has_value());
    int last = last_day_of_week(ex.effective->end);
    REQUIRE(daily.columns.size() == static_cast<std::size_t>(last - min_day + 1));
    CHECK(daily.columns.front() == std::to_string(min_day));
    CHECK(daily.columns.back() == std::to_string(last));
}

TEST_CASE("weekly pivot matches the oracle and spans the effective weeks") {
    auto raw = fixture();
    auto ex = vle_filtered(kPair, raw, WeekRange{-4, 10}, RepeatPolicy::remove);
    auto weekly = pivot_weekly(ex);
    auto expected = oracle::weekly_cells(oracle::filter_clicks(raw, "AAA", "2013J", -4, 10, true));

    REQUIRE(weekly.students.size() == expected.size());
    for (const auto& [student, weeks] : expected)
        for (const auto& [week, clicks] : weeks)
            CHECK(cell_of(weekly, student, oracle::week_label(week)) == clicks);

    REQUIRE(ex.effective.has_value());
    std::vector<std::string> want;
    for (int w : weeks_in_range(ex.effective->begin, ex.effective->end))
        want.push_back(week_name(w));
    CHECK(weekly.columns == want);
}

TEST_CASE("weekly row sums equal daily row sums") {
    auto raw = fixture(23);
    auto ex = vle_filtered(kPair, raw, WeekRange{-4, 39}, RepeatPolicy::keep);
    auto daily = pivot_daily(ex);
    auto weekly = pivot_weekly(ex);
    REQUIRE(daily.students == weekly.students);
    for (std::size_t r = 0; r < daily.students.size(); ++r) {
        double d = 0.0;
        double w = 0.0;
        for (double v : daily.cells[r]) d += v;
        for (double v : weekly.cells[r]) w += v;
        CHECK(d == w);
    }
}

TEST_CASE("activity pivot groups by type and matches the oracle") {
    auto raw = fixture();
    auto ex = vle_filtered(kPair, raw, WeekRange{-4, 39}, RepeatPolicy::keep);
    auto activity = pivot_activity(ex, raw);
    auto expected =
        oracle::activity_cells(oracle::filter_clicks(raw, "AAA", "2013J", -4, 39, false), raw);

    REQUIRE(activity.students.size() == expected.size());
    for (const auto& [student, types] : expected)
        for (const auto& [type, clicks] : types) CHECK(cell_of(activity, student, type) == clicks);

    CHECK(std::is_sorted(activity.columns.begin(), activity.columns.end()));
}

TEST_CASE("clickstream rows naming an unknown site fail loudly") {
    auto raw = fixture();
    auto ex = vle_filtered(kPair, raw, WeekRange{-4, 39}, RepeatPolicy::keep);
    raw.vle.clear();
    CHECK_THROWS_AS(pivot_activity(ex, raw), ValidationError);
}

TEST_CASE("click conservation holds across all pivots") {
    auto raw = fixture(29);
    auto ex = vle_filtered(kPair, raw, WeekRange{-3, 12}, RepeatPolicy::remove);
    double filtered_total = 0.0;
    for (const auto& r : ex.filtered) filtered_total += r.sum_click;
    CHECK(pivot_daily(ex).total() == filtered_total);
    CHECK(pivot_weekly(ex).total() == filtered_total);
    CHECK(pivot_activity(ex, raw).total() == filtered_total);
}

TEST_CASE("empty window produces empty matrices, not errors") {
    SynthSpec spec = default_synth_spec();
    spec.seed = 3;
    spec.n_students = 4;
    spec.click_density = 0.0;
    auto raw = generate_synthetic(spec).tables;
    auto ex = vle_filtered(kPair, raw, WeekRange{1, 4}, RepeatPolicy::keep);
    CHECK(ex.filtered.empty());
    CHECK_FALSE(ex.effective.has_value());
    CHECK(pivot_daily(ex).students.empty());
    CHECK(pivot_weekly(ex).columns.empty());
}

TEST_CASE("binary conversion is an indicator and idempotent") {
    std::mt19937_64 gen(5);
    for (int i = 0; i < 20; ++i) {
        auto m = random_matrix(gen);
        auto b = convert_clicks(m, ClickFormat::binary);
        for (std::size_t r = 0; r < m.cells.size(); ++r)
            for (std::size_t c = 0; c < m.cells[r].size(); ++c)
                CHECK(b.cells[r][c] == (m.cells[r][c] > 0 ? 1.0 : 0.0));
        CHECK(convert_clicks(b, ClickFormat::binary) == b);
    }
}

TEST_CASE("standardise1 normalizes each non-constant column") {
    std::mt19937_64 gen(6);
    for (int i = 0; i < 20; ++i) {
        auto m = random_matrix(gen);
        auto z = convert_clicks(m, ClickFormat::standardise1);
        for (std::size_t c = 0; c < m.columns.size(); ++c) {
            double mean = 0.0;
            for (std::size_t r = 0; r < z.cells.size(); ++r) mean += z.cells[r][c];
            mean /= static_cast<double>(z.cells.size());

            bool constant = true;
            for (std::size_t r = 1; r < m.cells.size(); ++r)
                if (m.cells[r][c] != m.cells[0][c]) constant = false;
            if (constant) {
                for (std::size_t r = 0; r < z.cells.size(); ++r) CHECK(z.cells[r][c] == 0.0);
                continue;
            }
            CHECK(std::abs(mean) < 1e-9);
            double var = 0.0;
            for (std::size_t r = 0; r < z.cells.size(); ++r)
                var += (z.cells[r][c] - mean) * (z.cells[r][c] - mean);
            var /= static_cast<double>(z.cells.size() - 1);
            CHECK(std::abs(std::sqrt(var) - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("standardise1 of the column 1,2,3 is -1,0,1") {
    ClickMatrix m;
    m.columns = {"v"};
    m.students = {StudentId("1"), StudentId("2"), StudentId("3")};
    m.cells = {{1.0}, {2.0}, {3.0}};
    auto z = convert_clicks(m, ClickFormat::standardise1);
    CHECK(z.cells[0][0] == doctest::Approx(-1.0));
    CHECK(z.cells[1][0] == doctest::Approx(0.0));
    CHECK(z.cells[2][0] == doctest::Approx(1.0));
}

TEST_CASE("standardise2 uses the grand mean and grand deviation") {
    ClickMatrix m;
    m.columns = {"a", "b"};
    m.students = {StudentId("1"), StudentId("2")};
    m.cells = {{0.0, 2.0}, {4.0, 6.0}};  // grand mean 3, sample sd sqrt(20/3)
    auto z = convert_clicks(m, ClickFormat::standardise2);
    double sd = std::sqrt(20.0 / 3.0);
    CHECK(z.cells[0][0] == doctest::Approx((0.0 - 3.0) / sd));
    CHECK(z.cells[1][1] == doctest::Approx((6.0 - 3.0) / sd));
}

TEST_CASE("logarithmic conversion is ln(1+x), monotone, zero-preserving") {
    ClickMatrix m;
    m.columns = {"a"};
    m.students = {StudentId("1"), StudentId("2"), StudentId("3")};
    m.cells = {{0.0}, {1.0}, {9.0}};
    auto l = convert_clicks(m, ClickFormat::logarithmic);
    CHECK(l.cells[0][0] == 0.0);
    CHECK(l.cells[1][0] == doctest::Approx(std::log(2.0)));
    CHECK(l.cells[2][0] == doctest::Approx(std::log(10.0)));
    CHECK(l.cells[0][0] < l.cells[1][0]);
    CHECK(l.cells[1][0] < l.cells[2][0]);
}

TEST_CASE("per-row argmax of activities survives the logarithmic transform") {
    auto raw = fixture(41);
    auto ex = vle_filtered(kPair, raw, WeekRange{-4, 39}, RepeatPolicy::keep);
    auto activity = pivot_activity(ex, raw);
    auto logged = convert_clicks(activity, ClickFormat::logarithmic);
    for (std::size_t r = 0; r < activity.cells.size(); ++r) {
        auto arg = [](const std::vector<double>& row) {
            return std::max_element(row.begin(), row.end()) - row.begin();
        };
        CHECK(arg(activity.cells[r]) == arg(logged.cells[r]));
    }
}

TEST_CASE("total conversion is the identity") {
    std::mt19937_64 gen(7);
    auto m = random_matrix(gen);
    CHECK(convert_clicks(m, ClickFormat::total) == m);
}

TEST_CASE("click format names round-trip") {
    for (auto f : {ClickFormat::total, ClickFormat::binary, ClickFormat::standardise1,
                   ClickFormat::standardise2, ClickFormat::logarithmic})
        CHECK(click_format_from(to_string(f)) == f);
    CHECK_THROWS_AS(click_format_from("cubic"), SpecError);
}

TEST_CASE("classification conserves clicks and follows the mapping") {
    auto raw = fixture(55);
    auto ex = vle_filtered(kPair, raw, WeekRange{-4, 39}, RepeatPolicy::keep);
    auto activity = pivot_activity(ex, raw);
    auto mapping = load_mapping("VARK", std::nullopt);
    auto classified = classify_activities(activity, mapping);
    CHECK(classified.matrix.total() == activity.total());
    CHECK(classified.warnings.empty());

    // every activity column lands in the category the mapping says
    for (std::size_t c = 0; c < activity.columns.size(); ++c) {
        auto category = mapping.category_of(activity.columns[c]);
        REQUIRE(category.has_value());
        for (std::size_t r = 0; r < activity.cells.size(); ++r) {
            if (activity.cells[r][c] == 0.0) continue;
            double cell = cell_of(classified.matrix, classified.matrix.students[r].str(), *category);
            CHECK(cell >= activity.cells[r][c]);
        }
    }
}

TEST_CASE("unmapped activity types fall into unclassified with a warning") {
    auto raw = fixture(60);
    auto ex = vle_filtered(kPair, raw, WeekRange{-4, 39}, RepeatPolicy::keep);
    auto activity = pivot_activity(ex, raw);

    ActivityMapping partial;
    partial.name = "tiny";
    partial.entries = {{"homepage", "navigation"}};
    auto classified = classify_activities(activity, partial);
    CHECK_FALSE(classified.warnings.empty());
    CHECK(classified.matrix.total() == activity.total());
    bool has_unclassified = false;
    for (const auto& c : classified.matrix.columns)
        if (c == "unclassified") has_unclassified = true;
    CHECK(has_unclassified);
}

TEST_CASE("single mapped category collapses rows to their totals") {
    auto raw = fixture(61);
    auto ex = vle_filtered(kPair, raw, WeekRange{-4, 39}, RepeatPolicy::keep);
    auto activity = pivot_activity(ex, raw);

    ActivityMapping all_one;
    all_one.name = "collapse";
    for (const auto& t : activity.columns) all_one.entries.push_back({t, "everything"});
    auto classified = classify_activities(activity, all_one);
    REQUIRE(classified.matrix.columns == std::vector<std::string>{"everything"});
    for (std::size_t r = 0; r < activity.cells.size(); ++r) {
        double total = 0.0;
        for (double v : activity.cells[r]) total += v;
        CHECK(classified.matrix.cells[r][0] == total);
    }
}
