#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "oulad/errors.hpp"
#include "oulad/stats.hpp"

using namespace oulad;

namespace {

FlatTable labeled_table(const std::vector<std::pair<std::string, std::string>>& pairs) {
    FlatTable t;
    t.columns = {"result", "band"};
    for (const auto& [r, b] : pairs)
        t.rows.push_back({r.empty() ? Cell::missing() : Cell::text(r),
                          b.empty() ? Cell::missing() : Cell::text(b)});
    return t;
}

ContingencyTable make_ct(std::vector<std::vector<long long>> counts) {
    ContingencyTable ct;
    for (std::size_t r = 0; r < counts.size(); ++r) ct.row_labels.push_back("r" + std::to_string(r));
    for (std::size_t c = 0; c < counts[0].size(); ++c)
        ct.col_labels.push_back("c" + std::to_string(c));
    ct.counts = std::move(counts);
    return ct;
}

// Direct evaluation of the chi-square sum, kept separate from the library.
double chi_square_by_hand(const ContingencyTable& ct) {
    double total = 0.0;
    std::vector<double> row_sums(ct.row_labels.size(), 0.0);
    std::vector<double> col_sums(ct.col_labels.size(), 0.0);
    for (std::size_t r = 0; r < ct.counts.size(); ++r)
        for (std::size_t c = 0; c < ct.counts[r].size(); ++c) {
            row_sums[r] += ct.counts[r][c];
            col_sums[c] += ct.counts[r][c];
            total += ct.counts[r][c];
        }
    double stat = 0.0;
    for (std::size_t r = 0; r < ct.counts.size(); ++r)
        for (std::size_t c = 0; c < ct.counts[r].size(); ++c) {
            double expected = row_sums[r] * col_sums[c] / total;
            double diff = ct.counts[r][c] - expected;
            stat += diff * diff / expected;
        }
    return stat;
}

}  // namespace

TEST_CASE("crosstab counts co-occurrences and excludes missing by default") {
    auto t = labeled_table({{"Pass", "low"},
                            {"Pass", "low"},
                            {"Fail", "high"},
                            {"", "low"},
                            {"Pass", ""}});
    auto ct = crosstab(t, "result", "band");
    REQUIRE(ct.row_labels == std::vector<std::string>{"Fail", "Pass"});
    REQUIRE(ct.col_labels == std::vector<std::string>{"high", "low"});
    CHECK(ct.counts[0][0] == 1);
    CHECK(ct.counts[1][1] == 2);
    CHECK(ct.total() == 3);
}

TEST_CASE("include_missing buckets blanks under an explicit level") {
    auto t = labeled_table({{"Pass", "low"}, {"", "low"}, {"Pass", ""}});
    auto ct = crosstab(t, "result", "band", true);
    CHECK(std::count(ct.row_labels.begin(), ct.row_labels.end(), "(missing)") == 1);
    CHECK(std::count(ct.col_labels.begin(), ct.col_labels.end(), "(missing)") == 1);
    CHECK(ct.total() == 3);
}

TEST_CASE("caller-pinned level order leads, remaining levels follow sorted") {
    auto t = labeled_table({{"Withdrawn", "x"},
                            {"Pass", "x"},
                            {"Distinction", "x"},
                            {"Fail", "x"}});
    auto ct = crosstab(t, "result", "band", false,
                       {"Distinction", "Pass", "Fail", "Withdrawn"});
    CHECK(ct.row_labels ==
          std::vector<std::string>{"Distinction", "Pass", "Fail", "Withdrawn"});

    auto partial = crosstab(t, "result", "band", false, {"Withdrawn"});
    CHECK(partial.row_labels ==
          std::vector<std::string>{"Withdrawn", "Distinction", "Fail", "Pass"});
}

TEST_CASE("numeric and integer cells become categorical labels") {
    FlatTable t;
    t.columns = {"k", "v"};
    t.rows = {{Cell::integer(1), Cell::text("a")}, {Cell::integer(2), Cell::text("a")},
              {Cell::integer(1), Cell::text("b")}};
    auto ct = crosstab(t, "k", "v");
    CHECK(ct.row_labels == std::vector<std::string>{"1", "2"});
}

TEST_CASE("unknown columns raise spec errors") {
    auto t = labeled_table({{"Pass", "low"}});
    CHECK_THROWS_AS(crosstab(t, "absent", "band"), SpecError);
    CHECK_THROWS_AS(crosstab(t, "result", "absent"), SpecError);
}

TEST_CASE("chi-square of a perfectly independent table is zero with p one") {
    auto result = chi_square_test(make_ct({{10, 10}, {10, 10}}));
    CHECK(result.statistic == 0.0);
    CHECK(result.df == 1);
    CHECK(result.p_value == 1.0);
}

TEST_CASE("chi-square of proportional rows is zero") {
    auto result = chi_square_test(make_ct({{2, 4, 6}, {3, 6, 9}}));
    CHECK(result.statistic == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(result.df == 2);
}

TEST_CASE("chi-square agrees with a direct evaluation of the formula") {
    auto ct = make_ct({{20, 5}, {5, 20}});
    auto result = chi_square_test(ct);
    CHECK(result.statistic == doctest::Approx(chi_square_by_hand(ct)).epsilon(1e-12));
    CHECK(result.df == 1);
    // 2x2 with these margins: (|20*20-5*5|)^2 * 50 / (25*25*25*25) = 9
    CHECK(result.statistic == doctest::Approx(18.0).epsilon(1e-12));
}

TEST_CASE("published quantile: statistic 3.841 at one degree of freedom gives p 0.05") {
    CHECK(std::abs(regularized_gamma_q(0.5, 3.841 / 2.0) - 0.05) < 1e-4);
    auto result = chi_square_test(make_ct({{1, 1}, {1, 1}}));
    (void)result;
}

TEST_CASE("gamma_q endpoints and errors") {
    CHECK(regularized_gamma_q(0.5, 0.0) == 1.0);
    CHECK(regularized_gamma_q(3.0, 1e9) == doctest::Approx(0.0));
    CHECK_THROWS_AS(regularized_gamma_q(0.0, 1.0), SpecError);
    CHECK_THROWS_AS(regularized_gamma_q(1.0, -2.0), SpecError);
}

TEST_CASE("p-value falls as the statistic grows, for several dfs") {
    for (int df : {1, 3, 9, 27}) {
        double prev = 1.1;
        for (double stat = 0.5; stat < 80.0; stat += 1.7) {
            double p = regularized_gamma_q(df / 2.0, stat / 2.0);
            CHECK(p < prev);
            prev = p;
        }
    }
}

TEST_CASE("statistic and df are invariant under row and column permutation") {
    std::mt19937_64 gen(99);
    for (int i = 0; i < 50; ++i) {
        std::size_t rows = 2 + gen() % 4;
        std::size_t cols = 2 + gen() % 4;
        std::vector<std::vector<long long>> counts(rows, std::vector<long long>(cols));
        for (auto& row : counts)
            for (auto& cell : row) cell = 1 + static_cast<long long>(gen() % 50);
        auto ct = make_ct(counts);
        auto base = chi_square_test(ct);

        auto shuffled = ct;
        std::shuffle(shuffled.counts.begin(), shuffled.counts.end(), gen);
        std::vector<std::size_t> perm(cols);
        for (std::size_t c = 0; c < cols; ++c) perm[c] = c;
        std::shuffle(perm.begin(), perm.end(), gen);
        for (auto& row : shuffled.counts) {
            auto old = row;
            for (std::size_t c = 0; c < cols; ++c) row[c] = old[perm[c]];
        }
        auto moved = chi_square_test(shuffled);
        CHECK(moved.df == base.df);
        CHECK(moved.statistic == doctest::Approx(base.statistic).epsilon(1e-9));
    }
}

TEST_CASE("degenerate tables are rejected") {
    CHECK_THROWS_AS(chi_square_test(make_ct({{1, 1}})), SpecError);       // one row
    CHECK_THROWS_AS(chi_square_test(make_ct({{0, 0}, {3, 4}})), SpecError);  // zero margin
    CHECK_THROWS_AS(chi_square_test(make_ct({{1, 0}, {3, 0}})), SpecError);
}

TEST_CASE("row proportions divide by row sums") {
    auto props = row_proportions(make_ct({{2, 2}, {1, 3}}));
    CHECK(props[0][0] == 0.5);
    CHECK(props[0][1] == 0.5);
    CHECK(props[1][0] == 0.25);
    CHECK(props[1][1] == 0.75);
    CHECK_THROWS_WITH_AS(row_proportions(make_ct({{0, 0}, {1, 1}})), doctest::Contains("r0"),
                         SpecError);
}

TEST_CASE("row proportions sum to one") {
    std::mt19937_64 gen(3);
    for (int i = 0; i < 20; ++i) {
        std::vector<std::vector<long long>> counts(2 + gen() % 3,
                                                   std::vector<long long>(2 + gen() % 3));
        for (auto& row : counts)
            for (auto& cell : row) cell = 1 + static_cast<long long>(gen() % 9);
        for (const auto& row : row_proportions(make_ct(counts))) {
            double sum = 0.0;
            for (double v : row) sum += v;
            CHECK(std::abs(sum - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("complete_cases drops exactly the rows with a missing cell") {
    FlatTable t;
    t.columns = {"a", "b"};
    t.rows = {{Cell::integer(1), Cell::text("x")},
              {Cell::integer(2), Cell::missing()},
              {Cell::integer(3), Cell::text("z")}};
    auto out = complete_cases(t);
    REQUIRE(out.rows.size() == 2);
    CHECK(out.rows[0][0].integer_value() == 1);
    CHECK(out.rows[1][0].integer_value() == 3);

    FlatTable clean;
    clean.columns = {"a"};
    clean.rows = {{Cell::integer(1)}};
    CHECK(complete_cases(clean) == clean);
}

TEST_CASE("stratified split is deterministic and respects the rounding rule") {
    std::mt19937_64 gen(1234);
    for (int trial = 0; trial < 50; ++trial) {
        FlatTable t;
        t.columns = {"id", "label"};
        std::size_t n = 5 + gen() % 200;
        std::size_t n_classes = 1 + gen() % 5;
        for (std::size_t i = 0; i < n; ++i)
            t.rows.push_back({Cell::integer(static_cast<long long>(i)),
                              Cell::text("c" + std::to_string(gen() % n_classes))});
        double p = 0.1 + 0.8 * (static_cast<double>(gen() % 1000) / 1000.0);
        std::uint64_t seed = gen();

        auto a = stratified_split(t, "label", p, seed);
        auto b = stratified_split(t, "label", p, seed);
        CHECK(a.train == b.train);
        CHECK(a.test == b.test);
        CHECK(a.train.rows.size() + a.test.rows.size() == n);

        std::map<std::string, std::size_t> class_sizes;
        for (const auto& row : t.rows) class_sizes[row[1].text_value()]++;
        std::map<std::string, std::size_t> train_sizes;
        for (const auto& row : a.train.rows) train_sizes[row[1].text_value()]++;
        for (const auto& [label, size] : class_sizes) {
            std::size_t expected =
                size < 2 ? size
                         : static_cast<std::size_t>(std::floor(p * static_cast<double>(size) + 0.5));
            CHECK(train_sizes[label] == expected);
        }
    }
}

TEST_CASE("split outputs preserve the original row order") {
    FlatTable t;
    t.columns = {"id", "label"};
    for (int i = 0; i < 40; ++i)
        t.rows.push_back({Cell::integer(i), Cell::text(i % 2 ? "a" : "b")});
    auto result = stratified_split(t, "label", 0.5, 9);
    for (const auto& part : {result.train, result.test}) {
        long long prev = -1;
        for (const auto& row : part.rows) {
            CHECK(row[0].integer_value() > prev);
            prev = row[0].integer_value();
        }
    }
}

TEST_CASE("two-row class at half splits one and one") {
    FlatTable t;
    t.columns = {"id", "label"};
    t.rows = {{Cell::integer(1), Cell::text("a")}, {Cell::integer(2), Cell::text("a")}};
    auto result = stratified_split(t, "label", 0.5, 1);
    CHECK(result.train.rows.size() == 1);
    CHECK(result.test.rows.size() == 1);
    CHECK(result.warnings.empty());
}

TEST_CASE("single-row classes go to train with a warning") {
    FlatTable t;
    t.columns = {"id", "label"};
    t.rows = {{Cell::integer(1), Cell::text("lonely")},
              {Cell::integer(2), Cell::text("a")},
              {Cell::integer(3), Cell::text("a")}};
    auto result = stratified_split(t, "label", 0.5, 1);
    CHECK_FALSE(result.warnings.empty());
    bool found = false;
    for (const auto& row : result.train.rows)
        if (row[1].text_value() == "lonely") found = true;
    CHECK(found);
}

TEST_CASE("split rejects bad proportions and unknown labels") {
    FlatTable t;
    t.columns = {"label"};
    t.rows = {{Cell::text("a")}, {Cell::text("a")}};
    CHECK_THROWS_AS(stratified_split(t, "label", 0.0, 1), SpecError);
    CHECK_THROWS_AS(stratified_split(t, "label", 1.0, 1), SpecError);
    CHECK_THROWS_AS(stratified_split(t, "absent", 0.5, 1), SpecError);
}

TEST_CASE("70/30 on classes of 60 and 40 yields 42 plus 28") {
    FlatTable t;
    t.columns = {"id", "label"};
    for (int i = 0; i < 100; ++i)
        t.rows.push_back({Cell::integer(i), Cell::text(i < 60 ? "x" : "y")});
    auto result = stratified_split(t, "label", 0.7, 123);
    CHECK(result.train.rows.size() == 70);
    CHECK(result.test.rows.size() == 30);
}
