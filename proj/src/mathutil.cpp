#include "anxdet/mathutil.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "anxdet/types.hpp"

namespace anxdet {

double mean_of(std::span<const double> v) {
    if (v.empty()) return 0.0;
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double population_std(std::span<const double> v) {
    if (v.empty()) return 0.0;
    double m = mean_of(v);
    double acc = 0.0;
    for (double x : v) acc += (x - m) * (x - m);
    return std::sqrt(acc / static_cast<double>(v.size()));
}

double median_of(std::span<const double> v) {
    if (v.empty()) return 0.0;
    std::vector<double> sorted(v.begin(), v.end());
    std::sort(sorted.begin(), sorted.end());
    std::size_t n = sorted.size();
    if (n % 2 == 1) return sorted[n / 2];
    return 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
}

double rms_of(std::span<const double> v) {
    if (v.empty()) return 0.0;
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc / static_cast<double>(v.size()));
}

double min_of(std::span<const double> v) {
    return v.empty() ? 0.0 : *std::min_element(v.begin(), v.end());
}

double max_of(std::span<const double> v) {
    return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double normal_two_sided_p(double z) {
    return std::erfc(std::fabs(z) / std::sqrt(2.0));
}

namespace {

// Continued fraction for the incomplete beta (modified Lentz).
double beta_cf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 3e-16;
    constexpr double kFpMin = 1e-300;

    double qab = a + b;
    double qap = a + 1.0;
    double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                      a * std::log(x) + b * std::log1p(-x);
    double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_cf(a, b, x) / a;
    }
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, double df) {
    if (!std::isfinite(t)) return 0.0;
    if (df <= 0.0) return 1.0;
    double x = df / (df + t * t);
    return incomplete_beta(0.5 * df, 0.5, x);
}

double beta_quantile(double u, double a, double b) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (incomplete_beta(a, b, mid) < u) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-14) break;
    }
    return 0.5 * (lo + hi);
}

WelchResult welch_t_test(std::span<const double> group_a, std::span<const double> group_b) {
    std::size_t n1 = group_a.size();
    std::size_t n2 = group_b.size();
    if (n1 < 2 || n2 < 2) throw DegenerateGroup("welch test needs at least two values per group");

    double m1 = mean_of(group_a);
    double m2 = mean_of(group_b);
    auto sample_var = [](std::span<const double> v, double m) {
        double acc = 0.0;
        for (double x : v) acc += (x - m) * (x - m);
        return acc / static_cast<double>(v.size() - 1);
    };
    double v1 = sample_var(group_a, m1);
    double v2 = sample_var(group_b, m2);
    double se2 = v1 / static_cast<double>(n1) + v2 / static_cast<double>(n2);
    if (se2 <= 0.0) throw DegenerateGroup("zero combined variance");

    WelchResult res;
    res.t = (m1 - m2) / std::sqrt(se2);
    double term1 = v1 / static_cast<double>(n1);
    double term2 = v2 / static_cast<double>(n2);
    res.df = se2 * se2 /
             (term1 * term1 / static_cast<double>(n1 - 1) +
              term2 * term2 / static_cast<double>(n2 - 1));
    res.p_value = student_t_two_sided_p(res.t, res.df);
    return res;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c) {
    auto mix = [](std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    std::uint64_t h = mix(base + 0x9e3779b97f4a7c15ULL);
    h = mix(h ^ (a + 0x9e3779b97f4a7c15ULL));
    h = mix(h ^ (b + 0x632be59bd9b4e019ULL));
    h = mix(h ^ (c + 0xe220a8397b1dcdafULL));
    return h;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace anxdet
