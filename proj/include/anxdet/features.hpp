#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "anxdet/exec.hpp"
#include "anxdet/types.hpp"

namespace anxdet {

inline constexpr double kWindowSeconds = 30.0;
inline constexpr double kHopSeconds = 15.0;

// Prominence floors that suppress numerical-noise maxima on the normalized
// [0,1] scale without hiding physiological events.
inline constexpr double kEdaMinProminence = 1e-4;
inline constexpr double kBvpMinProminence = 1e-3;

inline constexpr int kEdaFeatureCount = 18;
inline constexpr int kBvpFeatureCount = 17;

// Frozen feature name manifests (P_* for EDA peak families, S_* for BVP
// systolic-peak families). Column order is fixed and part of the contract.
const std::vector<std::string>& eda_feature_names();
const std::vector<std::string>& bvp_feature_names();
const std::vector<std::string>& feature_names(SignalKind kind);

double min_prominence_for(SignalKind kind);

// One fully contained analysis window inside a single protocol phase.
struct Window {
    std::size_t begin = 0;   // sample index
    std::size_t length = 0;  // samples
    double start_s = 0.0;
    Phase phase = Phase::PreStress;
};

struct SegmentationResult {
    std::vector<Window> windows;
    std::size_t short_segments = 0;  // phases shorter than one window, skipped
};

// 30 s windows with 15 s hop. The grid restarts at each phase start so no
// window straddles a phase boundary; a segment of length L seconds yields
// floor((L - 30) / 15) + 1 windows.
SegmentationResult segment_windows(const RawSignal& signal);

struct WindowFeatures {
    std::vector<double> values;
    bool peakless = false;  // no peaks above the prominence floor; values all zero
};

// The 18 EDA features: mean/median/std/RMS/max/min of peak amplitude, width
// (seconds) and prominence.
WindowFeatures eda_features(std::span<const double> window, double fs);

// The 17 BVP features: peaks per minute, six order statistics of systolic
// peak width (seconds) and prominence, mean/std/RMS/range of peak amplitude.
WindowFeatures bvp_features(std::span<const double> window, double fs);

WindowFeatures window_features(SignalKind kind, std::span<const double> window, double fs);

// Protocol phase -> context code: -1 pre-stress, 0 stress (anticipatory,
// speech, math), +1 recovery.
int context_code(Phase phase);

struct WindowMeta {
    std::string subject_id;
    Phase phase = Phase::PreStress;
    double window_start_s = 0.0;
    SignalKind kind = SignalKind::EDA;
    std::optional<AnxietyLabel> label;
    bool peakless = false;
};

struct FeatureMatrix {
    std::vector<std::string> column_names;  // features, then optional "context"
    std::vector<std::vector<double>> rows;
    std::vector<WindowMeta> meta;  // parallel to rows
    bool with_context = false;
    SignalKind kind = SignalKind::EDA;
    std::vector<std::string> session_ids;
    std::string config_hash;

    std::size_t n_rows() const { return rows.size(); }
    std::size_t n_cols() const { return column_names.size(); }
    std::size_t column_index(const std::string& name) const;  // throws ManifestMismatch
};

// Per-subject labels for the three questionnaire timestamps.
struct SubjectLabels {
    std::optional<AnxietyLabel> t1;
    std::optional<AnxietyLabel> t2;
    std::optional<AnxietyLabel> t3;
};

using LabelMap = std::map<std::string, SubjectLabels>;

// T1 labels pre-stress windows, T2 the three stress phases, T3 recovery.
// Throws MissingLabel when the needed timestamp is absent.
AnxietyLabel label_for_phase(const SubjectLabels& labels, Phase phase);

// A preprocessed session stream ready for feature extraction.
struct PreparedSession {
    std::string subject_id;
    RawSignal signal;  // preprocessed, phase marks intact
};

// One row per window over all sessions; appends the context column when
// requested and attaches phase labels from the label map (pass nullptr to
// leave rows unlabeled). Window rows are computed in parallel under
// Exec::Parallel with identical results to the serial path.
FeatureMatrix build_feature_matrix(const std::vector<PreparedSession>& sessions,
                                   const LabelMap* labels, bool with_context,
                                   Exec policy = default_exec());

}  // namespace anxdet
