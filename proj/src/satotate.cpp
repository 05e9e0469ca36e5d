#include "hecke/satotate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace hecke {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// uniform in [0, 1) from the (seed, index) pair alone
double uniform_at(std::uint64_t seed, std::uint64_t index) {
    const std::uint64_t h = splitmix64(splitmix64(seed) ^ (index + 1));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace

IntervalUnion::IntervalUnion(std::vector<STInterval> parts) : parts_(std::move(parts)) {
    double prev_hi = 0.0;
    for (const auto& iv : parts_) {
        if (!(iv.lo <= iv.hi))
            throw std::invalid_argument("IntervalUnion: interval with lo > hi");
        if (iv.lo < 0.0 || iv.hi > kPi + 1e-15)
            throw std::invalid_argument("IntervalUnion: endpoints outside [0, pi]");
        if (iv.lo < prev_hi)
            throw std::invalid_argument("IntervalUnion: intervals must be sorted and disjoint");
        prev_hi = iv.hi;
    }
}

double IntervalUnion::total_length() const {
    double sum = 0.0;
    for (const auto& iv : parts_) sum += iv.length();
    return sum;
}

double st_measure(const STInterval& interval) {
    if (!(interval.lo <= interval.hi) || interval.lo < 0.0 || interval.hi > kPi + 1e-15)
        throw std::invalid_argument("st_measure: invalid interval");
    return (interval.hi - interval.lo) / kPi -
           (std::sin(2.0 * interval.hi) - std::sin(2.0 * interval.lo)) / (2.0 * kPi);
}

double st_measure(const IntervalUnion& intervals) {
    double sum = 0.0;
    for (const auto& iv : intervals.parts()) sum += st_measure(iv);
    return sum;
}

double st_cdf(double theta) {
    return theta / kPi - std::sin(2.0 * theta) / (2.0 * kPi);
}

double st_quantile(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return kPi;
    double lo = 0.0, hi = kPi;
    for (int iter = 0; iter < 80 && hi - lo > 1e-12; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (st_cdf(mid) < u)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> st_sample_serial(std::uint64_t seed, std::size_t n) {
    if (n < 1) throw std::invalid_argument("st_sample: need n >= 1");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = st_quantile(uniform_at(seed, i));
    return out;
}

std::vector<double> st_sample(std::uint64_t seed, std::size_t n) {
    if (n < 1) throw std::invalid_argument("st_sample: need n >= 1");
    std::vector<double> out(n);
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < n; ++i) out[i] = st_quantile(uniform_at(seed, i));
    return out;
}

IntervalUnion sign_region(int m, Sign sign) {
    if (m < 1) throw std::invalid_argument("sign_region: need m >= 1");
    const double k = static_cast<double>(m) + 1.0;
    std::vector<STInterval> parts;
    if (sign == Sign::Positive) {
        for (int j = 0; 2 * j + 1 <= m + 1; ++j) {
            const double hi = (2 * j + 1 == m + 1) ? kPi : (2.0 * j + 1.0) * kPi / k;
            parts.push_back({2.0 * j * kPi / k, hi});
        }
    } else {
        for (int j = 1; 2 * j <= m + 1; ++j) {
            const double hi = (2 * j == m + 1) ? kPi : 2.0 * j * kPi / k;
            parts.push_back({(2.0 * j - 1.0) * kPi / k, hi});
        }
    }
    return IntervalUnion(std::move(parts));
}

double density_closed_form(int m, Sign sign) {
    if (m < 1) throw std::invalid_argument("density_closed_form: need m >= 1");
    if (m % 2 == 1) return 0.5;
    const double tan_term = std::tan(kPi / (m + 1)) / (2.0 * kPi);
    if (sign == Sign::Positive)
        return (m + 2) / (2.0 * (m + 1)) - tan_term;
    return m / (2.0 * (m + 1)) + tan_term;
}

}  // namespace hecke
