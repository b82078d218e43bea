#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oulad/flat.hpp"

namespace oulad {

struct ContingencyTable {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<long long>> counts;  // rows x cols

    long long total() const;
    long long row_sum(std::size_t r) const;
    long long col_sum(std::size_t c) const;
};

struct ChiSquareResult {
    double statistic = 0.0;
    int df = 0;
    double p_value = 1.0;
};

// Co-occurrence counts of two columns. Rows with a missing value in either
// column are excluded unless include_missing is set, which buckets them
// under "(missing)". Caller-supplied level orders pin the leading labels;
// unlisted observed levels follow lexicographically.
ContingencyTable crosstab(const FlatTable& table, const std::string& row_column,
                          const std::string& col_column, bool include_missing = false,
                          const std::vector<std::string>& row_order = {},
                          const std::vector<std::string>& col_order = {});

// Pearson chi-square without continuity correction; p-value from the
// regularized upper incomplete gamma. Zero row or column margin ->
// SpecError.
ChiSquareResult chi_square_test(const ContingencyTable& ct);

// Each cell divided by its row sum. Zero row -> SpecError naming the label.
std::vector<std::vector<double>> row_proportions(const ContingencyTable& ct);

// Regularized upper incomplete gamma Q(a, x), a > 0, x >= 0. Series for
// x < a + 1, continued fraction otherwise; relative error <= 1e-10.
double regularized_gamma_q(double a, double x);

// Rows containing any missing cell removed; order preserved.
FlatTable complete_cases(const FlatTable& table);

struct SplitResult {
    FlatTable train;
    FlatTable test;
    std::vector<std::string> warnings;
};

// Deterministic stratified split. Within each label class (classes taken in
// sorted order), floor(p * n + 0.5) rows go to train via a seeded shuffle;
// classes with fewer than two rows go wholly to train with a warning. Both
// outputs preserve the original row order.
SplitResult stratified_split(const FlatTable& table, const std::string& label_column, double p,
                             std::uint64_t seed);

}  // namespace oulad
