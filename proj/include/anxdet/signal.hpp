#pragma once

#include <complex>
#include <span>
#include <vector>

#include "anxdet/types.hpp"

namespace anxdet {

struct FilterSpec {
    int order = 5;
    double cutoff_hz = 0.0;
    double fs = 0.0;
};

// Digital IIR transfer function b(z)/a(z), a[0] = 1.
struct IirCoefficients {
    std::vector<double> b;
    std::vector<double> a;

    int order() const { return static_cast<int>(a.size()) - 1; }
};

// Low-pass cutoffs used by the pipeline: 1 Hz for EDA, 10 Hz for BVP,
// order-5 Butterworth in both cases.
FilterSpec default_filter_spec(SignalKind kind, double fs);

struct NormalizeResult {
    RawSignal signal;
    bool constant_input = false;  // quality flag: max == min, output forced to zeros
};

// Min-max scaling of the full segment into [0, 1]. A constant segment maps to
// all zeros with the constant_input flag set instead of dividing by zero.
NormalizeResult normalize_minmax(const RawSignal& signal);

// Scaling against a fixed calibration range (streaming mode, where the range
// comes from a calibration segment instead of the data being scaled).
std::vector<double> normalize_with_range(std::span<const double> x, double lo, double hi,
                                         bool* constant_range = nullptr);

// Butterworth low-pass via the analog prototype and the bilinear transform
// with frequency pre-warping, so |H| at the cutoff is exactly -3 dB.
IirCoefficients design_butterworth_lowpass(const FilterSpec& spec);

std::complex<double> frequency_response(const IirCoefficients& coeffs, double freq_hz, double fs);

// Single-pass direct-form-II-transposed filter with initial state zi
// (pass an empty zi for zero initial conditions).
std::vector<double> iir_filter(const IirCoefficients& coeffs, std::span<const double> x,
                               std::span<const double> zi = {});

// Steady-state filter state for a unit-step input; scaled by the first sample
// of each pass to suppress startup transients in filter_zero_phase.
std::vector<double> steady_state_zi(const IirCoefficients& coeffs);

// Forward-backward (zero-phase) filtering with odd-symmetric reflection
// padding of 3 * order samples. Requires len(x) > 3 * order.
std::vector<double> filter_zero_phase(const IirCoefficients& coeffs, std::span<const double> x);

struct PreprocessResult {
    RawSignal signal;
    bool constant_input = false;
};

// normalize_minmax, then the kind-specific order-5 low-pass applied
// forward-backward, then a clip back into [0, 1]. Phase marks pass through.
PreprocessResult preprocess(const RawSignal& signal);

// Streaming variant: scale against a precomputed calibration range, filter,
// clip. Used per window buffer by the stream bench.
std::vector<double> preprocess_window(std::span<const double> x, const IirCoefficients& coeffs,
                                      double calib_lo, double calib_hi);

}  // namespace anxdet
