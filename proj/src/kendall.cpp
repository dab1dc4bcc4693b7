#include "anxdet/kendall.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "anxdet/mathutil.hpp"

namespace anxdet {

namespace {

// Inversions of v counted with an iterative bottom-up merge sort.
std::int64_t count_inversions(std::vector<double>& v) {
    std::int64_t swaps = 0;
    std::size_t n = v.size();
    std::vector<double> buf(n);
    for (std::size_t width = 1; width < n; width *= 2) {
        for (std::size_t lo = 0; lo + width < n; lo += 2 * width) {
            std::size_t mid = lo + width;
            std::size_t hi = std::min(lo + 2 * width, n);
            std::size_t i = lo, j = mid, k = lo;
            while (i < mid && j < hi) {
                if (v[j] < v[i]) {
                    swaps += static_cast<std::int64_t>(mid - i);
                    buf[k++] = v[j++];
                } else {
                    buf[k++] = v[i++];
                }
            }
            while (i < mid) buf[k++] = v[i++];
            while (j < hi) buf[k++] = v[j++];
            std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo),
                      buf.begin() + static_cast<std::ptrdiff_t>(hi),
                      v.begin() + static_cast<std::ptrdiff_t>(lo));
        }
    }
    return swaps;
}

struct TieCounts {
    std::int64_t pairs = 0;       // sum t(t-1)/2
    std::int64_t triple = 0;      // sum t(t-1)(t-2)
    std::int64_t weighted = 0;    // sum t(t-1)(2t+5)
};

template <typename Equal>
TieCounts tie_counts(std::size_t n, Equal&& equal) {
    TieCounts out;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        while (j < n && equal(j - 1, j)) ++j;
        auto t = static_cast<std::int64_t>(j - i);
        out.pairs += t * (t - 1) / 2;
        out.triple += t * (t - 1) * (t - 2);
        out.weighted += t * (t - 1) * (2 * t + 5);
        i = j;
    }
    return out;
}

}  // namespace

CorrelationResult kendall_tau_b(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("kendall_tau_b: size mismatch");
    std::size_t n = x.size();
    if (n < 2) throw std::invalid_argument("kendall_tau_b: need at least two observations");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (x[a] != x[b]) return x[a] < x[b];
        return y[a] < y[b];
    });

    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = x[order[i]];
        ys[i] = y[order[i]];
    }

    TieCounts tx = tie_counts(n, [&](std::size_t a, std::size_t b) { return xs[a] == xs[b]; });
    TieCounts txy = tie_counts(
        n, [&](std::size_t a, std::size_t b) { return xs[a] == xs[b] && ys[a] == ys[b]; });

    std::vector<double> y_sorted_for_ties = ys;
    std::sort(y_sorted_for_ties.begin(), y_sorted_for_ties.end());
    TieCounts ty = tie_counts(n, [&](std::size_t a, std::size_t b) {
        return y_sorted_for_ties[a] == y_sorted_for_ties[b];
    });

    auto n64 = static_cast<std::int64_t>(n);
    std::int64_t n0 = n64 * (n64 - 1) / 2;
    if (tx.pairs == n0 || ty.pairs == n0) {
        throw AllTied("kendall tau undefined for a constant input");
    }

    // With rows sorted by (x, y), inversions of the y sequence are exactly
    // the discordant pairs; pairs tied in x contribute none.
    std::int64_t dis = count_inversions(ys);
    std::int64_t s = n0 - tx.pairs - ty.pairs + txy.pairs - 2 * dis;  // C - D

    CorrelationResult res;
    res.n = n;
    res.tau_b = static_cast<double>(s) /
                (std::sqrt(static_cast<double>(n0 - tx.pairs)) *
                 std::sqrt(static_cast<double>(n0 - ty.pairs)));

    // Tie-adjusted variance of C - D (normal approximation).
    double v0 = static_cast<double>(n64) * (n64 - 1) * (2.0 * n64 + 5.0);
    double var = (v0 - static_cast<double>(tx.weighted) - static_cast<double>(ty.weighted)) / 18.0;
    var += static_cast<double>(tx.pairs) * static_cast<double>(ty.pairs) /
           (0.5 * static_cast<double>(n64) * (n64 - 1.0));
    if (n64 > 2) {
        var += static_cast<double>(tx.triple) * static_cast<double>(ty.triple) /
               (9.0 * n64 * (n64 - 1.0) * (n64 - 2.0));
    }
    if (var <= 0.0) {
        res.p_value = 1.0;
        return res;
    }
    double z = static_cast<double>(s) / std::sqrt(var);
    res.p_value = normal_two_sided_p(z);
    return res;
}

SelectionReport select_features(const FeatureMatrix& matrix,
                                std::span<const std::size_t> train_rows, double alpha,
                                Exec policy) {
    SelectionReport report;
    std::size_t n_cols = matrix.n_cols();
    report.entries.resize(n_cols);

    std::vector<double> labels;
    labels.reserve(train_rows.size());
    for (std::size_t r : train_rows) {
        if (!matrix.meta[r].label.has_value()) {
            throw MissingLabel("feature selection needs labeled rows");
        }
        labels.push_back(matrix.meta[r].label == AnxietyLabel::A ? 1.0 : 0.0);
    }

    exec_for(policy, static_cast<std::int64_t>(n_cols), [&](std::int64_t c) {
        auto col = static_cast<std::size_t>(c);
        std::vector<double> values;
        values.reserve(train_rows.size());
        for (std::size_t r : train_rows) values.push_back(matrix.rows[r][col]);

        SelectionEntry entry;
        entry.name = matrix.column_names[col];
        try {
            CorrelationResult corr = kendall_tau_b(values, labels);
            entry.tau = corr.tau_b;
            entry.p_value = corr.p_value;
            entry.selected = corr.p_value < alpha;
        } catch (const AllTied&) {
            entry.tau = 0.0;
            entry.p_value = 1.0;
            entry.selected = false;
        }
        report.entries[col] = std::move(entry);
    });

    for (const SelectionEntry& e : report.entries) {
        if (e.selected) report.selected_names.push_back(e.name);
    }
    for (std::size_t col = 0; col < n_cols && !train_rows.empty(); ++col) {
        bool constant = true;
        for (std::size_t i = 1; i < train_rows.size() && constant; ++i) {
            if (matrix.rows[train_rows[i]][col] != matrix.rows[train_rows[0]][col]) {
                constant = false;
            }
        }
        if (constant) ++report.constant_columns;
    }
    return report;
}

}  // namespace anxdet
