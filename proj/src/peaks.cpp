#include "anxdet/peaks.hpp"

#include <cstdio>

namespace anxdet {

std::vector<std::size_t> find_local_maxima(std::span<const double> x) {
    std::vector<std::size_t> maxima;
    if (x.size() < 3) return maxima;
    std::size_t n = x.size();
    std::size_t i = 1;
    while (i + 1 < n) {
        if (x[i] > x[i - 1]) {
            std::size_t j = i;
            while (j + 1 < n && x[j + 1] == x[i]) ++j;
            if (j + 1 < n && x[j + 1] < x[i]) {
                maxima.push_back((i + j) / 2);  // plateau midpoint, round half down
            }
            i = j + 1;
        } else {
            ++i;
        }
    }
    return maxima;
}

namespace {

bool is_local_maximum(std::span<const double> x, std::size_t idx) {
    if (idx == 0 || idx + 1 >= x.size()) return false;
    // Nearest non-equal neighbour on each side must exist and be smaller.
    std::size_t l = idx;
    while (l > 0 && x[l - 1] == x[idx]) --l;
    if (l == 0 || x[l - 1] > x[idx]) return false;
    std::size_t r = idx;
    while (r + 1 < x.size() && x[r + 1] == x[idx]) ++r;
    if (r + 1 >= x.size() || x[r + 1] > x[idx]) return false;
    return true;
}

}  // namespace

ProminenceResult peak_prominence(std::span<const double> x, std::size_t peak_index) {
    if (!is_local_maximum(x, peak_index)) {
        throw NotAPeak("index " + std::to_string(peak_index) + " is not a local maximum");
    }
    double amp = x[peak_index];

    ProminenceResult res;
    double left_min = amp;
    res.left_base = peak_index;
    for (std::size_t i = peak_index; i-- > 0;) {
        if (x[i] > amp) break;
        if (x[i] < left_min) {
            left_min = x[i];
            res.left_base = i;
        }
    }
    double right_min = amp;
    res.right_base = peak_index;
    for (std::size_t i = peak_index + 1; i < x.size(); ++i) {
        if (x[i] > amp) break;
        if (x[i] < right_min) {
            right_min = x[i];
            res.right_base = i;
        }
    }
    res.prominence = amp - std::max(left_min, right_min);
    return res;
}

WidthResult peak_width(std::span<const double> x, std::size_t peak_index,
                       const ProminenceResult& prom, double rel_height) {
    if (!is_local_maximum(x, peak_index)) {
        throw NotAPeak("index " + std::to_string(peak_index) + " is not a local maximum");
    }
    double amp = x[peak_index];
    double height = amp - rel_height * prom.prominence;

    WidthResult res;
    // Walk outward while strictly above the evaluation height, then place the
    // crossing by linear interpolation (or exactly on the sample when equal).
    std::size_t i = peak_index;
    while (i > prom.left_base && x[i] > height) --i;
    res.width_left = static_cast<double>(i);
    if (x[i] < height) {
        res.width_left += (height - x[i]) / (x[i + 1] - x[i]);
    }

    std::size_t j = peak_index;
    while (j < prom.right_base && x[j] > height) ++j;
    res.width_right = static_cast<double>(j);
    if (x[j] < height) {
        res.width_right -= (height - x[j]) / (x[j - 1] - x[j]);
    }

    res.width = res.width_right - res.width_left;
    return res;
}

PeakSet detect_peaks(std::span<const double> x, double fs, double min_prominence) {
    PeakSet set;
    set.window_fs = fs;
    set.window_len = x.size();
    if (x.size() < 3) return set;

    for (std::size_t idx : find_local_maxima(x)) {
        ProminenceResult prom = peak_prominence(x, idx);
        if (!(prom.prominence > min_prominence)) continue;
        WidthResult width = peak_width(x, idx, prom, 0.5);
        Peak peak;
        peak.index = idx;
        peak.amplitude = x[idx];
        peak.prominence = prom.prominence;
        peak.left_base = prom.left_base;
        peak.right_base = prom.right_base;
        peak.width = width.width;
        peak.width_left = width.width_left;
        peak.width_right = width.width_right;
        set.peaks.push_back(peak);
    }
    return set;
}

std::string peakset_to_csv(const PeakSet& set) {
    std::string out = "index,amplitude,prominence,width_s\n";
    char line[128];
    for (const Peak& p : set.peaks) {
        double width_s = set.window_fs > 0 ? p.width / set.window_fs : p.width;
        std::snprintf(line, sizeof(line), "%zu,%.9g,%.9g,%.9g\n", p.index, p.amplitude,
                      p.prominence, width_s);
        out += line;
    }
    return out;
}

}  // namespace anxdet
