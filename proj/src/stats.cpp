#include "oulad/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "oulad/errors.hpp"
#include "oulad/rng.hpp"

namespace oulad {
namespace {

// Ordered distinct labels: pinned levels first (those actually observed),
// then the remaining observed labels sorted.
std::vector<std::string> level_order(const std::vector<std::string>& observed,
                                     const std::vector<std::string>& pinned) {
    std::vector<std::string> rest = observed;
    std::sort(rest.begin(), rest.end());
    rest.erase(std::unique(rest.begin(), rest.end()), rest.end());

    std::vector<std::string> out;
    for (const auto& level : pinned) {
        auto it = std::find(rest.begin(), rest.end(), level);
        if (it != rest.end()) {
            out.push_back(level);
            rest.erase(it);
        }
    }
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

double lgamma_safe(double x) {
    return std::lgamma(x);
}

// Lower-gamma series representation: P(a, x) = x^a e^-x / Γ(a) Σ x^n / (a)_n.
double gamma_p_series(double a, double x) {
    const int max_iter = 500;
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < max_iter; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - lgamma_safe(a));
}

// Upper-gamma continued fraction (modified Lentz).
double gamma_q_cf(double a, double x) {
    const int max_iter = 500;
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= max_iter; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - lgamma_safe(a)) * h;
}

}  // namespace

long long ContingencyTable::total() const {
    long long n = 0;
    for (const auto& row : counts) {
        for (long long c : row) n += c;
    }
    return n;
}

long long ContingencyTable::row_sum(std::size_t r) const {
    long long n = 0;
    for (long long c : counts[r]) n += c;
    return n;
}

long long ContingencyTable::col_sum(std::size_t c) const {
    long long n = 0;
    for (const auto& row : counts) n += row[c];
    return n;
}

ContingencyTable crosstab(const FlatTable& table, const std::string& row_column,
                          const std::string& col_column, bool include_missing,
                          const std::vector<std::string>& row_order,
                          const std::vector<std::string>& col_order) {
    const int ri = table.require_column(row_column);
    const int ci = table.require_column(col_column);
    const std::string missing_label = "(missing)";

    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<std::string> row_seen;
    std::vector<std::string> col_seen;
    for (const auto& row : table.rows) {
        const Cell& rc = row[static_cast<std::size_t>(ri)];
        const Cell& cc = row[static_cast<std::size_t>(ci)];
        if ((rc.is_missing() || cc.is_missing()) && !include_missing) continue;
        std::string rlabel = rc.is_missing() ? missing_label : rc.to_field();
        std::string clabel = cc.is_missing() ? missing_label : cc.to_field();
        row_seen.push_back(rlabel);
        col_seen.push_back(clabel);
        pairs.emplace_back(std::move(rlabel), std::move(clabel));
    }

    ContingencyTable ct;
    ct.row_labels = level_order(row_seen, row_order);
    ct.col_labels = level_order(col_seen, col_order);
    std::map<std::string, std::size_t> rindex;
    std::map<std::string, std::size_t> cindex;
    for (std::size_t i = 0; i < ct.row_labels.size(); ++i) rindex[ct.row_labels[i]] = i;
    for (std::size_t i = 0; i < ct.col_labels.size(); ++i) cindex[ct.col_labels[i]] = i;

    ct.counts.assign(ct.row_labels.size(),
                     std::vector<long long>(ct.col_labels.size(), 0));
    for (const auto& [r, c] : pairs) ++ct.counts[rindex[r]][cindex[c]];
    return ct;
}

double regularized_gamma_q(double a, double x) {
    if (a <= 0.0) throw SpecError("gamma shape parameter must be positive");
    if (x < 0.0) throw SpecError("gamma argument must be non-negative");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

ChiSquareResult chi_square_test(const ContingencyTable& ct) {
    const std::size_t r = ct.row_labels.size();
    const std::size_t c = ct.col_labels.size();
    if (r < 2 || c < 2)
        throw SpecError("chi-square needs at least a 2x2 table, got " + std::to_string(r) + "x" +
                        std::to_string(c));

    const double total = static_cast<double>(ct.total());
    std::vector<double> row_sums(r), col_sums(c);
    for (std::size_t i = 0; i < r; ++i) {
        row_sums[i] = static_cast<double>(ct.row_sum(i));
        if (row_sums[i] == 0.0)
            throw SpecError("degenerate contingency table: row '" + ct.row_labels[i] +
                            "' has zero margin");
    }
    for (std::size_t j = 0; j < c; ++j) {
        col_sums[j] = static_cast<double>(ct.col_sum(j));
        if (col_sums[j] == 0.0)
            throw SpecError("degenerate contingency table: column '" + ct.col_labels[j] +
                            "' has zero margin");
    }

    double statistic = 0.0;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            const double expected = row_sums[i] * col_sums[j] / total;
            const double d = static_cast<double>(ct.counts[i][j]) - expected;
            statistic += d * d / expected;
        }
    }

    ChiSquareResult result;
    result.statistic = statistic;
    result.df = static_cast<int>((r - 1) * (c - 1));
    result.p_value = regularized_gamma_q(static_cast<double>(result.df) / 2.0, statistic / 2.0);
    return result;
}

std::vector<std::vector<double>> row_proportions(const ContingencyTable& ct) {
    std::vector<std::vector<double>> out;
    out.reserve(ct.counts.size());
    for (std::size_t i = 0; i < ct.counts.size(); ++i) {
        const double sum = static_cast<double>(ct.row_sum(i));
        if (sum == 0.0)
            throw SpecError("row '" + ct.row_labels[i] + "' has zero sum");
        std::vector<double> row;
        row.reserve(ct.counts[i].size());
        for (long long c : ct.counts[i]) row.push_back(static_cast<double>(c) / sum);
        out.push_back(std::move(row));
    }
    return out;
}

FlatTable complete_cases(const FlatTable& table) {
    FlatTable out;
    out.columns = table.columns;
    for (const auto& row : table.rows) {
        bool complete = true;
        for (const auto& cell : row) {
            if (cell.is_missing()) {
                complete = false;
                break;
            }
        }
        if (complete) out.rows.push_back(row);
    }
    return out;
}

SplitResult stratified_split(const FlatTable& table, const std::string& label_column, double p,
                             std::uint64_t seed) {
    if (!(p > 0.0 && p < 1.0))
        throw SpecError("split proportion must lie strictly between 0 and 1");
    const int li = table.require_column(label_column);

    std::map<std::string, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < table.rows.size(); ++i)
        classes[table.rows[i][static_cast<std::size_t>(li)].to_field()].push_back(i);

    SplitResult result;
    std::vector<bool> to_train(table.rows.size(), false);
    DeterministicRng rng(seed);
    for (auto& [label, indices] : classes) {
        if (indices.size() < 2) {
            result.warnings.push_back("class '" + label + "' has fewer than 2 rows; assigned " +
                                      "entirely to train");
            for (std::size_t i : indices) to_train[i] = true;
            continue;
        }
        const auto k = static_cast<std::size_t>(
            std::floor(p * static_cast<double>(indices.size()) + 0.5));
        rng.shuffle(indices);
        for (std::size_t i = 0; i < k; ++i) to_train[indices[i]] = true;
    }

    result.train.columns = table.columns;
    result.test.columns = table.columns;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        (to_train[i] ? result.train : result.test).rows.push_back(table.rows[i]);
    }
    return result;
}

}  // namespace oulad
