#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "anxdet/features.hpp"
#include "anxdet/types.hpp"

namespace anxdet {

inline constexpr int kStaiItems = 20;
inline constexpr int kStaiMinScore = 20;
inline constexpr int kStaiMaxScore = 80;

enum class StaiTimestamp { T1 = 0, T2 = 1, T3 = 2 };

std::string to_string(StaiTimestamp t);
StaiTimestamp stai_timestamp_from_string(const std::string& s);

// One filled-in 20-item state questionnaire. positive_mask marks the
// positively phrased items ("I feel calm") whose weights are reversed
// before summing.
struct StaiResponse {
    std::string subject_id;
    StaiTimestamp timestamp = StaiTimestamp::T1;
    std::array<int, kStaiItems> items{};
    std::array<bool, kStaiItems> positive_mask{};
};

inline int reverse_item_weight(int w) { return 5 - w; }

// Sum of item weights after reversing positive items; result in [20, 80].
// Throws InvalidItem for weights outside [1, 4].
int score_stai(const StaiResponse& response);

// Pooled z-scores over the whole cohort (all subjects, all timestamps),
// population standard deviation. Throws DegenerateCohort when fewer than two
// scores are given or all scores are equal.
std::vector<double> standardize_scores(std::span<const double> raw_scores);

// Anxious strictly above the population mean; z == 0 resolves to NA.
AnxietyLabel label_from_z(double z);

struct ScoredResponse {
    std::string subject_id;
    StaiTimestamp timestamp = StaiTimestamp::T1;
    int raw = 0;
    double z = 0.0;
    AnxietyLabel label = AnxietyLabel::NA;
};

struct CohortLabels {
    std::vector<ScoredResponse> scored;
    LabelMap by_subject;
};

// Score every response, standardize over the pooled cohort, and fold the
// per-timestamp labels into a per-subject map for window labeling.
CohortLabels label_cohort(const std::vector<StaiResponse>& responses);

// Welch two-sample p-value between the standardized scores of the anxious and
// non-anxious groups.
double group_separation(std::span<const double> z_anxious, std::span<const double> z_not_anxious);

}  // namespace anxdet
