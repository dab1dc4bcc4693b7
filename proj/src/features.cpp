#include "anxdet/features.hpp"

#include <cmath>
#include <cstdio>

#include "anxdet/mathutil.hpp"
#include "anxdet/peaks.hpp"

namespace anxdet {

namespace {

std::vector<std::string> family_names(const std::string& prefix) {
    return {prefix + "_mean", prefix + "_median", prefix + "_std",
            prefix + "_rms",  prefix + "_max",    prefix + "_min"};
}

void append_family_stats(std::vector<double>& out, std::span<const double> values) {
    out.push_back(mean_of(values));
    out.push_back(median_of(values));
    out.push_back(population_std(values));
    out.push_back(rms_of(values));
    out.push_back(max_of(values));
    out.push_back(min_of(values));
}

}  // namespace

const std::vector<std::string>& eda_feature_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& family : {"P_amp", "P_width", "P_prom"}) {
            for (auto& name : family_names(family)) n.push_back(name);
        }
        return n;
    }();
    return names;
}

const std::vector<std::string>& bvp_feature_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        n.push_back("S_num_min");
        for (const auto& family : {"S_width", "S_prom"}) {
            for (auto& name : family_names(family)) n.push_back(name);
        }
        n.push_back("S_amp_mean");
        n.push_back("S_amp_std");
        n.push_back("S_amp_rms");
        n.push_back("S_amp_range");
        return n;
    }();
    return names;
}

const std::vector<std::string>& feature_names(SignalKind kind) {
    return kind == SignalKind::EDA ? eda_feature_names() : bvp_feature_names();
}

double min_prominence_for(SignalKind kind) {
    return kind == SignalKind::EDA ? kEdaMinProminence : kBvpMinProminence;
}

SegmentationResult segment_windows(const RawSignal& signal) {
    validate_signal(signal);
    SegmentationResult res;
    auto window_len = static_cast<std::size_t>(std::llround(kWindowSeconds * signal.fs));
    auto hop_len = static_cast<std::size_t>(std::llround(kHopSeconds * signal.fs));

    for (const PhaseMark& mark : signal.phase_marks) {
        std::size_t seg_len = mark.end - mark.begin;
        if (seg_len < window_len) {
            ++res.short_segments;
            continue;
        }
        for (std::size_t start = mark.begin; start + window_len <= mark.end; start += hop_len) {
            Window w;
            w.begin = start;
            w.length = window_len;
            w.start_s = static_cast<double>(start) / signal.fs;
            w.phase = mark.phase;
            res.windows.push_back(w);
        }
    }
    return res;
}

WindowFeatures eda_features(std::span<const double> window, double fs) {
    PeakSet peaks = detect_peaks(window, fs, kEdaMinProminence);

    WindowFeatures out;
    if (peaks.peaks.empty()) {
        out.values.assign(kEdaFeatureCount, 0.0);
        out.peakless = true;
        return out;
    }

    std::vector<double> amps, widths, proms;
    amps.reserve(peaks.count());
    widths.reserve(peaks.count());
    proms.reserve(peaks.count());
    for (const Peak& p : peaks.peaks) {
        amps.push_back(p.amplitude);
        widths.push_back(p.width / fs);
        proms.push_back(p.prominence);
    }
    out.values.reserve(kEdaFeatureCount);
    append_family_stats(out.values, amps);
    append_family_stats(out.values, widths);
    append_family_stats(out.values, proms);
    return out;
}

WindowFeatures bvp_features(std::span<const double> window, double fs) {
    PeakSet peaks = detect_peaks(window, fs, kBvpMinProminence);

    WindowFeatures out;
    if (peaks.peaks.empty()) {
        out.values.assign(kBvpFeatureCount, 0.0);
        out.peakless = true;
        return out;
    }

    std::vector<double> amps, widths, proms;
    amps.reserve(peaks.count());
    widths.reserve(peaks.count());
    proms.reserve(peaks.count());
    for (const Peak& p : peaks.peaks) {
        amps.push_back(p.amplitude);
        widths.push_back(p.width / fs);
        proms.push_back(p.prominence);
    }

    double duration_s = static_cast<double>(window.size()) / fs;
    out.values.reserve(kBvpFeatureCount);
    out.values.push_back(static_cast<double>(peaks.count()) * 60.0 / duration_s);
    append_family_stats(out.values, widths);
    append_family_stats(out.values, proms);
    out.values.push_back(mean_of(amps));
    out.values.push_back(population_std(amps));
    out.values.push_back(rms_of(amps));
    out.values.push_back(max_of(amps) - min_of(amps));
    return out;
}

WindowFeatures window_features(SignalKind kind, std::span<const double> window, double fs) {
    return kind == SignalKind::EDA ? eda_features(window, fs) : bvp_features(window, fs);
}

int context_code(Phase phase) {
    switch (phase) {
        case Phase::PreStress: return -1;
        case Phase::AnticipatoryStress:
        case Phase::Speech:
        case Phase::Math: return 0;
        case Phase::Recovery: return 1;
    }
    throw UnknownPhase("phase value out of range");
}

std::size_t FeatureMatrix::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < column_names.size(); ++i) {
        if (column_names[i] == name) return i;
    }
    throw ManifestMismatch("no column named '" + name + "' in feature matrix");
}

AnxietyLabel label_for_phase(const SubjectLabels& labels, Phase phase) {
    const std::optional<AnxietyLabel>* slot = nullptr;
    switch (phase) {
        case Phase::PreStress: slot = &labels.t1; break;
        case Phase::AnticipatoryStress:
        case Phase::Speech:
        case Phase::Math: slot = &labels.t2; break;
        case Phase::Recovery: slot = &labels.t3; break;
    }
    if (slot == nullptr || !slot->has_value()) {
        throw MissingLabel("no STAI label for phase " + to_string(phase));
    }
    return **slot;
}

FeatureMatrix build_feature_matrix(const std::vector<PreparedSession>& sessions,
                                   const LabelMap* labels, bool with_context, Exec policy) {
    FeatureMatrix matrix;
    if (sessions.empty()) return matrix;

    matrix.kind = sessions.front().signal.kind;
    matrix.with_context = with_context;
    matrix.column_names = feature_names(matrix.kind);
    if (with_context) matrix.column_names.push_back("context");

    struct Job {
        std::size_t session;
        Window window;
    };
    std::vector<Job> jobs;
    for (std::size_t s = 0; s < sessions.size(); ++s) {
        const PreparedSession& session = sessions[s];
        if (session.signal.kind != matrix.kind) {
            throw ManifestMismatch("mixed signal kinds in one feature matrix");
        }
        matrix.session_ids.push_back(session.subject_id);
        // Resolve labels up front so the parallel loop below cannot throw.
        SegmentationResult seg = segment_windows(session.signal);
        for (const Window& w : seg.windows) {
            if (labels != nullptr) {
                auto it = labels->find(session.subject_id);
                if (it == labels->end()) {
                    throw MissingLabel("no STAI scores for subject " + session.subject_id);
                }
                (void)label_for_phase(it->second, w.phase);
            }
            jobs.push_back({s, w});
        }
    }

    matrix.rows.resize(jobs.size());
    matrix.meta.resize(jobs.size());
    exec_for(policy, static_cast<std::int64_t>(jobs.size()), [&](std::int64_t i) {
        const Job& job = jobs[static_cast<std::size_t>(i)];
        const PreparedSession& session = sessions[job.session];
        std::span<const double> slice(session.signal.samples.data() + job.window.begin,
                                      job.window.length);
        WindowFeatures feats = window_features(matrix.kind, slice, session.signal.fs);
        std::vector<double> row = std::move(feats.values);
        if (with_context) row.push_back(static_cast<double>(context_code(job.window.phase)));

        WindowMeta meta;
        meta.subject_id = session.subject_id;
        meta.phase = job.window.phase;
        meta.window_start_s = job.window.start_s;
        meta.kind = matrix.kind;
        meta.peakless = feats.peakless;
        if (labels != nullptr) {
            meta.label = label_for_phase(labels->at(session.subject_id), job.window.phase);
        }
        matrix.rows[static_cast<std::size_t>(i)] = std::move(row);
        matrix.meta[static_cast<std::size_t>(i)] = std::move(meta);
    });

    std::string canon = "kind=" + to_string(matrix.kind) +
                        ";context=" + (with_context ? std::string("1") : std::string("0")) +
                        ";win=30;hop=15;eps=" + std::to_string(min_prominence_for(matrix.kind)) +
                        ";filter=butter5";
    char hex[32];
    std::snprintf(hex, sizeof(hex), "%016llx",
                  static_cast<unsigned long long>(fnv1a(canon)));
    matrix.config_hash = hex;
    return matrix;
}

}  // namespace anxdet
