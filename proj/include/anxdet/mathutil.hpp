#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace anxdet {

// Descriptive statistics over a value list. std is the population standard
// deviation (divide by n), so a single value gives std = 0.
double mean_of(std::span<const double> v);
double population_std(std::span<const double> v);
double median_of(std::span<const double> v);  // average of central pair for even n
double rms_of(std::span<const double> v);
double min_of(std::span<const double> v);
double max_of(std::span<const double> v);

double normal_cdf(double x);
// Two-sided tail probability of a standard normal: P(|Z| >= |z|).
double normal_two_sided_p(double z);

// Regularized incomplete beta function I_x(a, b), continued-fraction evaluation.
double incomplete_beta(double a, double b, double x);

// Two-sided p-value of a Student-t statistic with (possibly fractional) df.
double student_t_two_sided_p(double t, double df);

// Quantile of Beta(a, b) by bisection on the regularized incomplete beta.
double beta_quantile(double u, double a, double b);

struct WelchResult {
    double t = 0.0;
    double df = 0.0;
    double p_value = 1.0;
};

// Welch's unequal-variance two-sample t-test (two-sided). Requires at least
// two values per group; throws DegenerateGroup on zero combined variance.
WelchResult welch_t_test(std::span<const double> group_a, std::span<const double> group_b);

// Deterministic counter-free PRNG used everywhere randomness is needed.
// splitmix64 core; per-task streams are derived with derive_seed so results
// do not depend on thread scheduling.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n) without modulo bias.
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    double next_normal() {
        double u1 = next_double();
        double u2 = next_double();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    double next_exponential(double rate) {
        double u = next_double();
        return -std::log1p(-u) / rate;
    }

private:
    std::uint64_t state_;
};

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0);

// Fisher-Yates shuffle driven by Rng (stable across platforms).
template <typename T>
void shuffle_with(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(v[i - 1], v[j]);
    }
}

// FNV-1a over a string, for config provenance hashes.
std::uint64_t fnv1a(const std::string& s);

}  // namespace anxdet
