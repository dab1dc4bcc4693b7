#include "anxdet/signal.hpp"

#include <algorithm>
#include <cmath>

namespace anxdet {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Multiply polynomial (in z^-1) by the factor (1 - root * z^-1).
void multiply_root(std::vector<std::complex<double>>& poly, std::complex<double> root) {
    poly.push_back({0.0, 0.0});
    for (std::size_t i = poly.size() - 1; i > 0; --i) {
        poly[i] -= root * poly[i - 1];
    }
}

// Solve the small dense system M x = rhs in place (partial pivoting).
std::vector<double> solve_dense(std::vector<std::vector<double>> m, std::vector<double> rhs) {
    std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::fabs(m[r][col]) > std::fabs(m[pivot][col])) pivot = r;
        }
        std::swap(m[col], m[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        double diag = m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            double f = m[r][col] / diag;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double acc = rhs[i];
        for (std::size_t c = i + 1; c < n; ++c) acc -= m[i][c] * x[c];
        x[i] = acc / m[i][i];
    }
    return x;
}

}  // namespace

FilterSpec default_filter_spec(SignalKind kind, double fs) {
    FilterSpec spec;
    spec.order = 5;
    spec.cutoff_hz = kind == SignalKind::EDA ? 1.0 : 10.0;
    spec.fs = fs;
    return spec;
}

NormalizeResult normalize_minmax(const RawSignal& signal) {
    validate_signal(signal);
    NormalizeResult res;
    res.signal = signal;
    auto [lo_it, hi_it] = std::minmax_element(signal.samples.begin(), signal.samples.end());
    double lo = *lo_it, hi = *hi_it;
    if (hi == lo) {
        std::fill(res.signal.samples.begin(), res.signal.samples.end(), 0.0);
        res.constant_input = true;
        return res;
    }
    double scale = 1.0 / (hi - lo);
    for (double& v : res.signal.samples) v = (v - lo) * scale;
    return res;
}

std::vector<double> normalize_with_range(std::span<const double> x, double lo, double hi,
                                         bool* constant_range) {
    std::vector<double> out(x.size(), 0.0);
    if (hi == lo) {
        if (constant_range) *constant_range = true;
        return out;
    }
    if (constant_range) *constant_range = false;
    double scale = 1.0 / (hi - lo);
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] - lo) * scale;
    return out;
}

IirCoefficients design_butterworth_lowpass(const FilterSpec& spec) {
    if (spec.order < 1) throw InvalidCutoff("filter order must be >= 1");
    if (spec.fs <= 0.0) throw InvalidCutoff("sampling rate must be positive");
    if (spec.cutoff_hz <= 0.0 || spec.cutoff_hz >= spec.fs / 2.0) {
        throw InvalidCutoff("cutoff must lie strictly between 0 and Nyquist");
    }

    int n = spec.order;
    double fs2 = 2.0 * spec.fs;
    double warped = fs2 * std::tan(kPi * spec.cutoff_hz / spec.fs);

    // Analog prototype poles on the left-half-plane Butterworth circle,
    // scaled to the pre-warped cutoff, then mapped by the bilinear transform.
    std::vector<std::complex<double>> digital_poles;
    digital_poles.reserve(n);
    for (int k = 0; k < n; ++k) {
        double theta = kPi / 2.0 + kPi * (2.0 * k + 1.0) / (2.0 * n);
        std::complex<double> pole = warped * std::complex<double>(std::cos(theta), std::sin(theta));
        digital_poles.push_back((fs2 + pole) / (fs2 - pole));
    }

    std::vector<std::complex<double>> a_poly{{1.0, 0.0}};
    for (const auto& p : digital_poles) multiply_root(a_poly, p);

    IirCoefficients coeffs;
    coeffs.a.resize(a_poly.size());
    for (std::size_t i = 0; i < a_poly.size(); ++i) coeffs.a[i] = a_poly[i].real();

    // n zeros at z = -1 give binomial numerator coefficients.
    coeffs.b.assign(static_cast<std::size_t>(n) + 1, 0.0);
    coeffs.b[0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j > 0; --j) coeffs.b[j] += coeffs.b[j - 1];
    }

    // Normalize to unity DC gain.
    double sum_a = 0.0, sum_b = 0.0;
    for (double v : coeffs.a) sum_a += v;
    for (double v : coeffs.b) sum_b += v;
    double gain = sum_a / sum_b;
    for (double& v : coeffs.b) v *= gain;
    return coeffs;
}

std::complex<double> frequency_response(const IirCoefficients& coeffs, double freq_hz, double fs) {
    double w = 2.0 * kPi * freq_hz / fs;
    std::complex<double> num{0.0, 0.0}, den{0.0, 0.0};
    for (std::size_t k = 0; k < coeffs.b.size(); ++k) {
        num += coeffs.b[k] * std::polar(1.0, -w * static_cast<double>(k));
    }
    for (std::size_t k = 0; k < coeffs.a.size(); ++k) {
        den += coeffs.a[k] * std::polar(1.0, -w * static_cast<double>(k));
    }
    return num / den;
}

std::vector<double> iir_filter(const IirCoefficients& coeffs, std::span<const double> x,
                               std::span<const double> zi) {
    std::size_t order = coeffs.a.size() - 1;
    std::vector<double> z(order, 0.0);
    if (!zi.empty()) {
        for (std::size_t i = 0; i < order && i < zi.size(); ++i) z[i] = zi[i];
    }
    std::vector<double> y(x.size(), 0.0);
    for (std::size_t nidx = 0; nidx < x.size(); ++nidx) {
        double xn = x[nidx];
        double yn = coeffs.b[0] * xn + z[0];
        for (std::size_t i = 0; i + 1 < order; ++i) {
            z[i] = coeffs.b[i + 1] * xn + z[i + 1] - coeffs.a[i + 1] * yn;
        }
        z[order - 1] = coeffs.b[order] * xn - coeffs.a[order] * yn;
        y[nidx] = yn;
    }
    return y;
}

std::vector<double> steady_state_zi(const IirCoefficients& coeffs) {
    std::size_t n = coeffs.a.size() - 1;
    // Solve (I - companion(a)^T) zi = b[1:] - a[1:] * b[0].
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (std::size_t r = 0; r < n; ++r) {
        m[r][0] = coeffs.a[r + 1];
        if (r == 0) m[0][0] += 1.0;
        if (r >= 1) m[r][r] += 1.0;
        if (r + 1 < n) m[r][r + 1] -= 1.0;
    }
    std::vector<double> rhs(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = coeffs.b[i + 1] - coeffs.a[i + 1] * coeffs.b[0];
    return solve_dense(std::move(m), std::move(rhs));
}

std::vector<double> filter_zero_phase(const IirCoefficients& coeffs, std::span<const double> x) {
    std::size_t order = coeffs.a.size() - 1;
    std::size_t padlen = 3 * order;
    if (x.size() <= padlen) {
        throw SegmentTooShort("segment of " + std::to_string(x.size()) +
                              " samples is too short for zero-phase filtering (need > " +
                              std::to_string(padlen) + ")");
    }

    std::size_t n = x.size();
    std::vector<double> ext(n + 2 * padlen);
    for (std::size_t i = 0; i < padlen; ++i) {
        ext[i] = 2.0 * x[0] - x[padlen - i];
        ext[padlen + n + i] = 2.0 * x[n - 1] - x[n - 2 - i];
    }
    std::copy(x.begin(), x.end(), ext.begin() + static_cast<std::ptrdiff_t>(padlen));

    std::vector<double> zi = steady_state_zi(coeffs);
    std::vector<double> zi_scaled(zi.size());

    for (std::size_t i = 0; i < zi.size(); ++i) zi_scaled[i] = zi[i] * ext.front();
    std::vector<double> fwd = iir_filter(coeffs, ext, zi_scaled);

    std::reverse(fwd.begin(), fwd.end());
    for (std::size_t i = 0; i < zi.size(); ++i) zi_scaled[i] = zi[i] * fwd.front();
    std::vector<double> bwd = iir_filter(coeffs, fwd, zi_scaled);
    std::reverse(bwd.begin(), bwd.end());

    return std::vector<double>(bwd.begin() + static_cast<std::ptrdiff_t>(padlen),
                               bwd.begin() + static_cast<std::ptrdiff_t>(padlen + n));
}

PreprocessResult preprocess(const RawSignal& signal) {
    FilterSpec spec = default_filter_spec(signal.kind, signal.fs);
    if (spec.cutoff_hz >= signal.fs / 2.0) {
        throw InvalidCutoff("sampling rate " + std::to_string(signal.fs) +
                            " Hz cannot represent the " + std::to_string(spec.cutoff_hz) +
                            " Hz cutoff");
    }

    NormalizeResult norm = normalize_minmax(signal);
    IirCoefficients coeffs = design_butterworth_lowpass(spec);
    std::vector<double> filtered = filter_zero_phase(coeffs, norm.signal.samples);
    // Zero-phase filtering over/undershoots slightly; peak statistics expect
    // the normalized range, so clip back into [0, 1].
    for (double& v : filtered) v = std::clamp(v, 0.0, 1.0);

    PreprocessResult res;
    res.signal = signal;
    res.signal.samples = std::move(filtered);
    res.constant_input = norm.constant_input;
    return res;
}

std::vector<double> preprocess_window(std::span<const double> x, const IirCoefficients& coeffs,
                                      double calib_lo, double calib_hi) {
    std::vector<double> scaled = normalize_with_range(x, calib_lo, calib_hi);
    std::vector<double> filtered = filter_zero_phase(coeffs, scaled);
    for (double& v : filtered) v = std::clamp(v, 0.0, 1.0);
    return filtered;
}

}  // namespace anxdet
