#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hecke/eigenform.hpp"
#include "hecke/hecke_core.hpp"
#include "hecke/satotate.hpp"

namespace hecke {

// Finite value sequence, indexed from 1.
struct SignSequence {
    std::vector<double> values;
};

// Predicted vs. empirical density at a finite cutoff.  Carries the raw
// counts so callers can judge convergence themselves.
struct DensityReport {
    std::string label;
    std::optional<double> predicted;
    double empirical = 0.0;
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 0;
    double tolerance = 0.0;
    bool pass = false;  // vacuously true with no prediction
};

DensityReport make_report(std::string label, std::optional<double> predicted,
                          std::uint64_t numerator, std::uint64_t denominator,
                          double tolerance);

// All pairs (i, j), i < j, of consecutive nonzero entries with opposite
// strict signs; zero entries are skipped, indices are 1-based.
std::vector<std::pair<std::size_t, std::size_t>> sign_changes(const SignSequence& seq);
std::vector<std::pair<std::size_t, std::size_t>> sign_changes(std::span<const mpz_class> values);

// Classification of A_p = {m >= 1 : C(p^m, f) C(p^m, g) != 0} from the two
// exact zero patterns at one prime site.
enum class NonvanishingKind { AllOfN, EvenIndices, Other };

struct NonvanishingClass {
    NonvanishingKind kind = NonvanishingKind::AllOfN;
    std::optional<unsigned> modulus_f;  // zero progression of f, if any
    std::optional<unsigned> modulus_g;
    std::uint64_t density_num = 1;  // exact natural density of A_p
    std::uint64_t density_den = 1;

    bool contains(std::uint64_t m) const;
};

NonvanishingClass classify_nonvanishing_set(const ZeroPattern& pattern_f,
                                            const ZeroPattern& pattern_g);

// Fraction of tabulated prime sites of norm <= x (level divisors excluded)
// with sign(C(p^m)) as requested, against the closed-form prediction.
// Requires every rational prime <= x tabulated when all sites have inertia
// degree 1; synthetic higher-degree tables are counted as given.
DensityReport empirical_prime_density(const Eigenform& form, int m, Sign sign,
                                      std::uint64_t x, double tolerance = 0.02);

// Fraction of n <= n_max with sin((n+1)theta_f) sin((n+1)theta_g) of the
// requested sign; sines within 1e-9 of zero count as exact zeros so that
// rational multiples of pi cycle exactly.  The 1/2 prediction needs
// {1, theta_f/2pi, theta_g/2pi} rationally independent, which floats cannot
// decide: the caller asserts it, otherwise the report carries no prediction.
DensityReport simultaneous_density(double theta_f, double theta_g, std::uint64_t n_max,
                                   Sign sign, bool independent_angles);

// Star-discrepancy lower bound of {({n alpha}, {n beta})}_{n<=N} over a
// 64 x 64 corner grid.  `degenerate` flags sequences that are clearly not
// equidistributing (estimate above 0.1).
struct DiscrepancyEstimate {
    double value = 0.0;
    bool degenerate = false;
};

DiscrepancyEstimate weyl_discrepancy(double alpha, double beta, std::uint64_t n_max);
DiscrepancyEstimate weyl_discrepancy_serial(double alpha, double beta, std::uint64_t n_max);

}  // namespace hecke
