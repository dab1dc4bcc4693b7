#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace anxdet {

enum class SignalKind { EDA, BVP };

// TSST protocol phases, in session order.
enum class Phase { PreStress, AnticipatoryStress, Speech, Math, Recovery };

inline constexpr int kNumPhases = 5;

std::string to_string(SignalKind kind);
std::string to_string(Phase phase);
SignalKind signal_kind_from_string(const std::string& s);
Phase phase_from_string(const std::string& s);  // throws UnknownPhase

// Sample-index range [begin, end) of one protocol phase within a session.
struct PhaseMark {
    Phase phase;
    std::size_t begin = 0;
    std::size_t end = 0;
};

// Uniformly sampled sensor stream. EDA runs at 4 Hz, BVP at 64 Hz in the
// standard ingestion format; other rates are allowed when stated explicitly.
struct RawSignal {
    std::vector<double> samples;
    double fs = 0.0;
    SignalKind kind = SignalKind::EDA;
    std::string session_id;
    std::vector<PhaseMark> phase_marks;

    double duration_s() const { return fs > 0 ? static_cast<double>(samples.size()) / fs : 0.0; }
};

// Checks fs > 0, non-empty samples, and ordered non-overlapping in-bounds
// phase marks. Throws std::invalid_argument on violation.
void validate_signal(const RawSignal& signal);

enum class AnxietyLabel { NA = 0, A = 1 };

inline std::string to_string(AnxietyLabel label) { return label == AnxietyLabel::A ? "A" : "NA"; }
AnxietyLabel anxiety_label_from_string(const std::string& s);

struct PipelineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidCutoff : PipelineError { using PipelineError::PipelineError; };
struct SegmentTooShort : PipelineError { using PipelineError::PipelineError; };
struct NotAPeak : PipelineError { using PipelineError::PipelineError; };
struct UnknownPhase : PipelineError { using PipelineError::PipelineError; };
struct MissingLabel : PipelineError { using PipelineError::PipelineError; };
struct InvalidItem : PipelineError { using PipelineError::PipelineError; };
struct DegenerateCohort : PipelineError { using PipelineError::PipelineError; };
struct DegenerateGroup : PipelineError { using PipelineError::PipelineError; };
struct AllTied : PipelineError { using PipelineError::PipelineError; };
struct TooFewRows : PipelineError { using PipelineError::PipelineError; };
struct ManifestMismatch : PipelineError { using PipelineError::PipelineError; };
struct EmptyTestSet : PipelineError { using PipelineError::PipelineError; };
struct CorruptModel : PipelineError { using PipelineError::PipelineError; };
struct VersionMismatch : PipelineError { using PipelineError::PipelineError; };
struct MissingArtifacts : PipelineError { using PipelineError::PipelineError; };
struct IoError : PipelineError { using PipelineError::PipelineError; };
struct ConfigError : PipelineError { using PipelineError::PipelineError; };

}  // namespace anxdet
