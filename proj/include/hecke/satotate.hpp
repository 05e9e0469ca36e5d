#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hecke {

enum class Sign { Positive, Negative };

// Subinterval of [0, pi], stored half-open [lo, hi); the measure has no
// atoms, so endpoint convention never changes a measure.
struct STInterval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
};

// Sorted, pairwise-disjoint subintervals of [0, pi].
class IntervalUnion {
public:
    IntervalUnion() = default;
    explicit IntervalUnion(std::vector<STInterval> parts);  // validates

    const std::vector<STInterval>& parts() const { return parts_; }
    double total_length() const;

private:
    std::vector<STInterval> parts_;
};

// mu_ST(I) = (2/pi) int_I sin^2(theta) dtheta, in closed form.
double st_measure(const STInterval& interval);
double st_measure(const IntervalUnion& intervals);

// CDF F(theta) = theta/pi - sin(2 theta)/(2 pi).
double st_cdf(double theta);

// Inverse CDF by bisection (tolerance 1e-12, at most 80 halvings).
double st_quantile(double u);

// Deterministic Sato-Tate draws: the i-th value depends only on (seed, i),
// so shards can be generated in parallel without changing the output.
std::vector<double> st_sample(std::uint64_t seed, std::size_t n);
std::vector<double> st_sample_serial(std::uint64_t seed, std::size_t n);

// Maximal open subintervals of (0, pi) where sin((m+1) theta) has the
// requested sign.
IntervalUnion sign_region(int m, Sign sign);

// Natural density of primes with C(p^m) of the requested sign: 1/2 for odd
// m; for even m the tan-corrected split (m+2)/(2(m+1)) -/+ tan(pi/(m+1))/(2 pi).
double density_closed_form(int m, Sign sign);

}  // namespace hecke
