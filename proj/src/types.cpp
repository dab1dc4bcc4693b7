#include "anxdet/types.hpp"

namespace anxdet {

std::string to_string(SignalKind kind) {
    return kind == SignalKind::EDA ? "EDA" : "BVP";
}

std::string to_string(Phase phase) {
    switch (phase) {
        case Phase::PreStress: return "pre_stress";
        case Phase::AnticipatoryStress: return "anticipatory_stress";
        case Phase::Speech: return "speech";
        case Phase::Math: return "math";
        case Phase::Recovery: return "recovery";
    }
    return "unknown";
}

SignalKind signal_kind_from_string(const std::string& s) {
    if (s == "EDA" || s == "eda") return SignalKind::EDA;
    if (s == "BVP" || s == "bvp") return SignalKind::BVP;
    throw std::invalid_argument("unknown signal kind: " + s);
}

Phase phase_from_string(const std::string& s) {
    if (s == "pre_stress") return Phase::PreStress;
    if (s == "anticipatory_stress") return Phase::AnticipatoryStress;
    if (s == "speech") return Phase::Speech;
    if (s == "math") return Phase::Math;
    if (s == "recovery") return Phase::Recovery;
    throw UnknownPhase("unknown protocol phase: " + s);
}

AnxietyLabel anxiety_label_from_string(const std::string& s) {
    if (s == "A") return AnxietyLabel::A;
    if (s == "NA") return AnxietyLabel::NA;
    throw std::invalid_argument("unknown anxiety label: " + s);
}

void validate_signal(const RawSignal& signal) {
    if (signal.fs <= 0.0) throw std::invalid_argument("sampling rate must be positive");
    if (signal.samples.empty()) throw std::invalid_argument("signal has no samples");
    std::size_t prev_end = 0;
    bool first = true;
    for (const auto& mark : signal.phase_marks) {
        if (mark.begin >= mark.end) throw std::invalid_argument("empty phase mark");
        if (!first && mark.begin < prev_end) throw std::invalid_argument("overlapping phase marks");
        if (mark.end > signal.samples.size()) throw std::invalid_argument("phase mark out of bounds");
        prev_end = mark.end;
        first = false;
    }
}

}  // namespace anxdet
