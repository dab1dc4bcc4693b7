#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "anxdet/exec.hpp"
#include "anxdet/features.hpp"

namespace anxdet {

struct CorrelationResult {
    double tau_b = 0.0;
    double p_value = 1.0;
    std::size_t n = 0;
};

// Tie-corrected Kendall rank correlation (tau-b) with a two-sided p-value
// from the normal approximation with tie-adjusted variance. Discordant pairs
// are counted by merge sort, so the cost is O(n log n) rather than the
// O(n^2) of direct pair enumeration. Throws AllTied when either input is
// constant.
CorrelationResult kendall_tau_b(std::span<const double> x, std::span<const double> y);

struct SelectionEntry {
    std::string name;
    double tau = 0.0;
    double p_value = 1.0;
    bool selected = false;
};

struct SelectionReport {
    std::vector<SelectionEntry> entries;       // every column, matrix order
    std::vector<std::string> selected_names;   // columns with p < alpha
    std::size_t constant_columns = 0;          // columns skipped as AllTied
};

// Correlates every feature column (context included) against the anxiety
// labels of the given training rows and keeps columns with p < alpha.
// Constant columns correlate with nothing and are reported unselected.
SelectionReport select_features(const FeatureMatrix& matrix,
                                std::span<const std::size_t> train_rows, double alpha = 0.05,
                                Exec policy = default_exec());

}  // namespace anxdet
