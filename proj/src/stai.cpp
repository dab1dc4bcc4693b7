#include "anxdet/stai.hpp"

#include <cmath>

#include "anxdet/mathutil.hpp"

namespace anxdet {

std::string to_string(StaiTimestamp t) {
    switch (t) {
        case StaiTimestamp::T1: return "T1";
        case StaiTimestamp::T2: return "T2";
        case StaiTimestamp::T3: return "T3";
    }
    return "?";
}

StaiTimestamp stai_timestamp_from_string(const std::string& s) {
    if (s == "T1") return StaiTimestamp::T1;
    if (s == "T2") return StaiTimestamp::T2;
    if (s == "T3") return StaiTimestamp::T3;
    throw std::invalid_argument("unknown STAI timestamp: " + s);
}

int score_stai(const StaiResponse& response) {
    int total = 0;
    for (int i = 0; i < kStaiItems; ++i) {
        int w = response.items[static_cast<std::size_t>(i)];
        if (w < 1 || w > 4) {
            throw InvalidItem("item " + std::to_string(i + 1) + " weight " + std::to_string(w) +
                              " outside [1,4]");
        }
        total += response.positive_mask[static_cast<std::size_t>(i)] ? reverse_item_weight(w) : w;
    }
    return total;
}

std::vector<double> standardize_scores(std::span<const double> raw_scores) {
    if (raw_scores.size() < 2) throw DegenerateCohort("need at least two scores to standardize");
    double m = mean_of(raw_scores);
    double sd = population_std(raw_scores);
    if (sd == 0.0) throw DegenerateCohort("all scores identical; z-scores undefined");
    std::vector<double> z(raw_scores.size());
    for (std::size_t i = 0; i < raw_scores.size(); ++i) z[i] = (raw_scores[i] - m) / sd;
    return z;
}

AnxietyLabel label_from_z(double z) {
    return z > 0.0 ? AnxietyLabel::A : AnxietyLabel::NA;
}

CohortLabels label_cohort(const std::vector<StaiResponse>& responses) {
    CohortLabels out;
    std::vector<double> raw;
    raw.reserve(responses.size());
    for (const StaiResponse& r : responses) {
        ScoredResponse s;
        s.subject_id = r.subject_id;
        s.timestamp = r.timestamp;
        s.raw = score_stai(r);
        raw.push_back(static_cast<double>(s.raw));
        out.scored.push_back(s);
    }

    std::vector<double> z = standardize_scores(raw);
    for (std::size_t i = 0; i < out.scored.size(); ++i) {
        out.scored[i].z = z[i];
        out.scored[i].label = label_from_z(z[i]);
        SubjectLabels& slot = out.by_subject[out.scored[i].subject_id];
        switch (out.scored[i].timestamp) {
            case StaiTimestamp::T1: slot.t1 = out.scored[i].label; break;
            case StaiTimestamp::T2: slot.t2 = out.scored[i].label; break;
            case StaiTimestamp::T3: slot.t3 = out.scored[i].label; break;
        }
    }
    return out;
}

double group_separation(std::span<const double> z_anxious,
                        std::span<const double> z_not_anxious) {
    if (z_anxious.empty() || z_not_anxious.empty()) {
        throw DegenerateGroup("both label groups must be non-empty");
    }
    return welch_t_test(z_anxious, z_not_anxious).p_value;
}

}  // namespace anxdet
