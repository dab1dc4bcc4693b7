#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "anxdet/types.hpp"

namespace anxdet {

// One detected local maximum. Widths are fractional sample positions;
// divide by fs to get seconds.
struct Peak {
    std::size_t index = 0;
    double amplitude = 0.0;
    double prominence = 0.0;
    std::size_t left_base = 0;
    std::size_t right_base = 0;
    double width = 0.0;  // samples
    double width_left = 0.0;
    double width_right = 0.0;
};

struct PeakSet {
    std::vector<Peak> peaks;
    double window_fs = 0.0;
    std::size_t window_len = 0;

    std::size_t count() const { return peaks.size(); }
};

// Every strict interior local maximum; a flat-topped run bounded by smaller
// samples on both sides reports its midpoint (round half down). Endpoints are
// never peaks.
std::vector<std::size_t> find_local_maxima(std::span<const double> x);

struct ProminenceResult {
    double prominence = 0.0;
    std::size_t left_base = 0;
    std::size_t right_base = 0;
};

// Topographic prominence: extend from the peak on each side until a strictly
// higher sample or the boundary; each base is the lowest sample of its
// interval (closest such sample wins ties); prominence is the drop to the
// higher of the two base values. Throws NotAPeak if the index is not a local
// maximum in the sense of find_local_maxima.
ProminenceResult peak_prominence(std::span<const double> x, std::size_t peak_index);

struct WidthResult {
    double width = 0.0;  // samples
    double width_left = 0.0;
    double width_right = 0.0;
};

// Width at the evaluation height amplitude - rel_height * prominence, with
// linear interpolation between samples and clamping at the prominence bases.
WidthResult peak_width(std::span<const double> x, std::size_t peak_index,
                       const ProminenceResult& prom, double rel_height = 0.5);

// Full detection pass: local maxima with prominence strictly above
// min_prominence, each annotated with prominence, bases and half-prominence
// width.
PeakSet detect_peaks(std::span<const double> x, double fs, double min_prominence = 0.0);

// Diagnostic dump, one line per peak: index,amplitude,prominence,width_s
std::string peakset_to_csv(const PeakSet& set);

}  // namespace anxdet
